fn main() {
    println!("tubelab");
}
