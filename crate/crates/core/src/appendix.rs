//! The published validity table for all words of length at most 5, kept
//! exactly as printed, and the audit that recomputes every cell.

use std::fmt;

use serde::Serialize;

use crate::classify::{signature, Signature};
use crate::enumerate::ContextId;
use crate::formula::{NWord, NegKind};
use crate::parse::parse_nword;
use crate::poset::{EVEN_COVERS, ODD_COVERS};

/// Rows as printed, columns in suite order. Do not correct these.
pub const PRINTED_ROWS: [(&str, &str); 63] = [
    ("p", "-+--+--++"),
    ("~p", "+-+---+--"),
    ("!p", "+-++-++++"),
    ("~~p", "-+-++--+-"),
    ("~!p", "-+-------"),
    ("!~p", "-+-++++++"),
    ("!!p", "-+--+-+++"),
    ("~~~p", "+-+---+--"),
    ("~~!p", "+-+++++++"),
    ("~!~p", "+--------"),
    ("~!!p", "+--------"),
    ("!~~p", "+-+--++++"),
    ("!~!p", "+-+++++++"),
    ("!!~p", "+-+---+++"),
    ("!!!p", "+-++-++++"),
    ("~~~~p", "-+-++--+-"),
    ("~~~!p", "-+-------"),
    ("~~!~p", "-++++++++"),
    ("~~!!p", "-++++++++"),
    ("~!~~p", "-+-------"),
    ("~!~!p", "-+-------"),
    ("~!!~p", "-+-------"),
    ("~!!!p", "-+-------"),
    ("!~~~p", "-+-++++++"),
    ("!~~!p", "-+----+++"),
    ("!~!~p", "-++++++++"),
    ("!~!!p", "-++++++++"),
    ("!!~~p", "-+-++-+++"),
    ("!!~!p", "-+----+++"),
    ("!!!~p", "-+-++++++"),
    ("!!!!p", "-+--+-+++"),
    ("~~~~~p", "+-+---+--"),
    ("~~~~!p", "+-+++++++"),
    ("~~~!~p", "+--------"),
    ("~~~!!p", "+--------"),
    ("~~!~~p", "+-+++++++"),
    ("~~!~!p", "+-+++++++"),
    ("~~!!~p", "+-+++++++"),
    ("~~!!!p", "+-+++++++"),
    ("~!~~~p", "+--------"),
    ("~!~~!p", "+--------"),
    ("~!~!~p", "+--------"),
    ("~!~!!p", "+--------"),
    ("~!!~~p", "+--------"),
    ("~!!~!p", "+--------"),
    ("~!!!~p", "+--------"),
    ("~!!!!p", "+--------"),
    ("!~~~~p", "+-+--++++"),
    ("!~~~!p", "+-+++++++"),
    ("!~~!~p", "+-----+++"),
    ("!~~!!p", "+-----+++"),
    ("!~!~~p", "+-+++++++"),
    ("!~!~!p", "+-+++++++"),
    ("!~!!~p", "+-+++++++"),
    ("!~!!!p", "+-+++++++"),
    ("!!~~~p", "+-+---+++"),
    ("!!~~!p", "+-+++++++"),
    ("!!~!~p", "+-----+++"),
    ("!!~!!p", "+-----+++"),
    ("!!!~~p", "+-+--++++"),
    ("!!!~!p", "+-+++++++"),
    ("!!!!~p", "+-+---+++"),
    ("!!!!!p", "-+--+-+++"),
];

/// The printed table as parsed words and signatures.
pub fn printed_table() -> Vec<(NWord, Signature)> {
    PRINTED_ROWS
        .iter()
        .map(|(w, s)| {
            (
                parse_nword(w).expect("fixture word"),
                s.parse().expect("fixture signature"),
            )
        })
        .collect()
}

/// Rows in the printed order: by length, then `~` before `!`.
pub fn table_words(max_len: usize) -> Vec<NWord> {
    let mut words: Vec<NWord> = NWord::all_up_to(max_len).collect();
    words.sort();
    words
}

/// Recomputed table for all words up to `max_len`.
pub fn computed_table(max_len: usize) -> Vec<(NWord, Signature)> {
    table_words(max_len)
        .into_iter()
        .map(|w| {
            let s = signature(&w);
            (w, s)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Markdown,
    Json,
}

pub fn render_table(rows: &[(NWord, Signature)], format: TableFormat) -> String {
    let mut out = String::new();
    match format {
        TableFormat::Csv => {
            out.push_str("word");
            for c in ContextId::ALL {
                out.push(',');
                out.push_str(c.id());
            }
            out.push('\n');
            for (w, s) in rows {
                out.push_str(&w.to_string());
                for c in ContextId::ALL {
                    out.push(',');
                    out.push(if s.get(c) { '+' } else { '-' });
                }
                out.push('\n');
            }
        }
        TableFormat::Markdown => {
            out.push('|');
            for c in ContextId::ALL {
                out.push_str(&format!(" | {}", c.pretty()));
            }
            out.push_str(" |\n|---");
            for _ in ContextId::ALL {
                out.push_str("|:-:");
            }
            out.push_str("|\n");
            for (w, s) in rows {
                out.push_str(&format!("| {}", w.pretty()));
                for c in ContextId::ALL {
                    out.push_str(if s.get(c) { " | +" } else { " | −" });
                }
                out.push_str(" |\n");
            }
        }
        TableFormat::Json => {
            #[derive(Serialize)]
            struct Row {
                word: String,
                signature: Signature,
            }
            let rows: Vec<Row> = rows
                .iter()
                .map(|(w, s)| Row {
                    word: w.to_string(),
                    signature: *s,
                })
                .collect();
            out = serde_json::to_string_pretty(&rows).expect("table serializes");
            out.push('\n');
        }
    }
    out
}

/// A printed cell that differs from the recomputed one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub word: String,
    pub context: &'static str,
    pub printed: bool,
    pub computed: bool,
    /// A law from the theory that the printed cell violates, if one is found.
    pub justification: Option<String>,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cell = |b: bool| if b { '+' } else { '-' };
        write!(
            f,
            "{} at {}: printed {}, computed {}",
            self.word,
            self.context,
            cell(self.printed),
            cell(self.computed)
        )?;
        match &self.justification {
            Some(j) => write!(f, "; {j}"),
            None => write!(f, "; no contradicted law found"),
        }
    }
}

/// A single-kind word of length at least 3 and its collapsed equivalent.
fn run_collapse(w: &NWord) -> Option<(NWord, &'static str)> {
    let negs = w.negs();
    let kind = *negs.first()?;
    if negs.len() < 3 || negs.iter().any(|&k| k != kind) {
        return None;
    }
    let (len, law) = match (kind, negs.len() % 2) {
        (NegKind::Int, 1) => (1, "odd runs of ~ collapse to ~"),
        (NegKind::Int, _) => (2, "even runs of ~ collapse to ~~"),
        (NegKind::Perp, 1) => (1, "odd runs of ! collapse to !"),
        (NegKind::Perp, _) => (2, "even runs of ! collapse to !!"),
    };
    Some((NWord::new(vec![kind; len]), law))
}

fn justify(
    word: &NWord,
    ctx: ContextId,
    printed: bool,
    table: &[(NWord, Signature)],
) -> Option<String> {
    let printed_at = |u: &NWord| table.iter().find(|(v, _)| v == u).map(|(_, s)| s.get(ctx));
    let cell = |b: bool| if b { '+' } else { '-' };

    if let Some((short, law)) = run_collapse(word) {
        if let Some(other) = printed_at(&short) {
            if other != printed {
                return Some(format!(
                    "{law}, so {word} must match {short}, printed {} there",
                    cell(other)
                ));
            }
        }
    }
    for (a, b) in EVEN_COVERS.iter().chain(&ODD_COVERS) {
        let a = parse_nword(a).expect("cover word");
        let b = parse_nword(b).expect("cover word");
        let (pa, pb) = match (printed_at(&a), printed_at(&b)) {
            (Some(pa), Some(pb)) => (pa, pb),
            _ => continue,
        };
        if (a == *word || b == *word) && pa && !pb {
            return Some(format!(
                "{a} -> {b} is valid, but {a} is printed + and {b} printed - there"
            ));
        }
    }
    None
}

/// Every printed cell that disagrees with the semantics.
pub fn errata() -> Vec<Mismatch> {
    errata_of(&printed_table())
}

/// Audits an arbitrary table in the fixture's layout.
pub fn errata_of(table: &[(NWord, Signature)]) -> Vec<Mismatch> {
    let mut out = Vec::new();
    for (w, printed) in table {
        let computed = signature(w);
        for ctx in ContextId::ALL {
            if printed.get(ctx) != computed.get(ctx) {
                out.push(Mismatch {
                    word: w.to_string(),
                    context: ctx.id(),
                    printed: printed.get(ctx),
                    computed: computed.get(ctx),
                    justification: justify(w, ctx, printed.get(ctx), table),
                });
            }
        }
    }
    out
}
