// Usage: cargo run --example classify [WORD...]

use iclneg::classify::is_irreducible;
use iclneg::rewrite::normalize_trace;
use iclneg::{normalize_semantic, parse_nword, signature};

fn main() {
    let mut words: Vec<String> = std::env::args().skip(1).collect();
    if words.is_empty() {
        words = ["!!!!!p", "~!~~p", "!!~~!p", "!~~!~p", "~!!~!p", "!~!~!~!~!~p"]
            .map(String::from)
            .to_vec();
    }
    for text in words {
        let w = match parse_nword(&text) {
            Ok(w) => w,
            Err(e) => {
                eprintln!("{text}: {e}");
                continue;
            }
        };
        let (nf, steps) = normalize_trace(&w);
        let semantic = normalize_semantic(&w).expect("every word lands in a class");
        assert_eq!(nf, semantic);
        println!(
            "{} => {}   signature {}   irreducible: {}",
            w.pretty(),
            nf.pretty(),
            signature(&w),
            is_irreducible(&w).unwrap()
        );
        for s in steps {
            println!("    {}  [{}]", s.result, s.rule);
        }
    }
}
