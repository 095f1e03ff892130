// Usage: cargo run --example evaluate
//
// Builds the three-world V model by hand and prints which worlds force a
// few formulas.

use iclneg::{parse_formula, RawModel};

fn main() {
    let raw = RawModel::from_json(
        r#"{"worlds":["r","a","b"],"root":"r","order":[["r","a"],["r","b"]],"valuation":{"b":["p"]}}"#,
    )
    .expect("well-formed JSON");
    let model = raw.validate().expect("a valid r-model");

    for text in ["p", "~p", "!p", "~~p", "!!p", "p | !p", "bot"] {
        let f = parse_formula(text).unwrap();
        let forcing: Vec<&str> = model
            .worlds()
            .iter()
            .filter(|w| model.forces(w, &f).unwrap())
            .map(String::as_str)
            .collect();
        let verdict = if model.valid_in(&f) { "valid" } else { "not valid" };
        println!("{:<8} forced at {:<12} {verdict}", f.pretty(), forcing.join(","));
    }

    // Above the root every world is imaginary.
    let top = model.generated_submodel("b").unwrap();
    println!("submodel at b is pseudo: {}", top.is_pseudo());
    let part = model.imaginary_part().unwrap();
    println!("imaginary part: {}", part.to_json());

    let broken = RawModel::from_json(r#"{"worlds":["r","a"],"root":"r","order":[["r","a"]],"valuation":{"r":["p"]}}"#)
        .unwrap();
    for defect in broken.validate().unwrap_err() {
        println!("rejected: {defect}");
    }
}
