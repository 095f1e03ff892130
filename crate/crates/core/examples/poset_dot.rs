// Usage: cargo run --example poset_dot | dot -Tsvg > poset.svg

use iclneg::{build_poset, emit_dot};

fn main() {
    let with_constants = std::env::args().nth(1).as_deref() != Some("--bare");
    let poset = build_poset(with_constants);
    eprintln!("{} nodes, {} covers", poset.len(), poset.hasse.len());
    for (lo, hi) in poset.labelled_covers() {
        eprintln!("  {} < {}", lo.pretty(), hi.pretty());
    }
    print!("{}", emit_dot(&poset));
}
