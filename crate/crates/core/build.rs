fn main() {
    // LAPACK/BLAS provider for ndarray-linalg (Debian's libopenblas bundles
    // BLAS, CBLAS and LAPACK in one shared object).
    println!("cargo:rustc-link-lib=dylib=openblas");
}
