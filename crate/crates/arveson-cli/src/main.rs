fn main() {
    println!("{}", arveson::probe());
}
