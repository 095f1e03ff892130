// Usage: cargo run --example appendix_table
//
// Recomputes the published validity table and lists the cells where the
// print differs.

use iclneg::appendix::{computed_table, errata, printed_table, render_table, TableFormat};

fn main() {
    let computed = computed_table(5);
    print!("{}", render_table(&computed, TableFormat::Markdown));

    let printed = printed_table();
    let agree: usize = printed
        .iter()
        .zip(&computed)
        .map(|((_, p), (_, c))| p.0.iter().zip(c.0.iter()).filter(|(a, b)| a == b).count())
        .sum();
    println!("\n{agree} of {} printed cells agree", printed.len() * 9);
    for m in errata() {
        println!("{m}");
    }
}
