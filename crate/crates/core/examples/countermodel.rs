// Usage: cargo run --example countermodel [FORMULA]

use iclneg::{enumerate_rmodels, find_countermodel, parse_formula, SearchBound};

fn main() {
    let formulas: Vec<String> = match std::env::args().nth(1) {
        Some(f) => vec![f],
        None => ["!!p -> p", "!~~p -> !!~p", "p | !p", "p | ~p", "~!p -> p"]
            .map(String::from)
            .to_vec(),
    };
    let bound = SearchBound::default();
    println!("{} rooted models within {bound}", enumerate_rmodels(bound, 1).count());

    for text in formulas {
        let f = match parse_formula(&text) {
            Ok(f) => f,
            Err(e) => {
                eprintln!("{text}: {e}");
                continue;
            }
        };
        match find_countermodel(&f, bound) {
            Some(cm) => println!(
                "{}  refuted at {} by {}",
                f.pretty(),
                cm.world,
                cm.model.to_json()
            ),
            None => println!("{}  valid within the bound", f.pretty()),
        }
    }
}
