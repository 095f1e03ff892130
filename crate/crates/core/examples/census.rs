// Usage: cargo run --release --example census [MAX_LEN]

use std::time::Instant;

use iclneg::census;

fn main() {
    let max_len: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("a length"))
        .unwrap_or(8);
    let start = Instant::now();
    let classes = census(max_len);
    let words: usize = classes.iter().map(|c| c.members.len()).sum();
    println!("{} words up to length {max_len}, {} classes ({:?})", words, classes.len(), start.elapsed());
    for c in &classes {
        let irreducible: Vec<String> = c.irreducible_members().iter().map(|w| w.to_string()).collect();
        println!(
            "{:<8} {}  {:>5} members  irreducible: {}",
            c.representative.to_string(),
            c.signature,
            c.members.len(),
            irreducible.join(" ")
        );
    }
}
