//! Text-producing entry points behind each `iclneg` subcommand.

use serde::Serialize;

use crate::appendix::{computed_table, errata, render_table, Mismatch, TableFormat};
use crate::classify::{census, census_json, is_irreducible, normalize_semantic, signature};
use crate::enumerate::{enumerate_rmodels, find_countermodel, SearchBound};
use crate::error::{Error, Result};
use crate::model::RawModel;
use crate::parse::{parse_formula, parse_nword};
use crate::poset::{build_poset, emit_dot};
use crate::rewrite::normalize_trace;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Csv,
    Markdown,
    Json,
    Dot,
}

fn parse_model(model_json: &str) -> Result<crate::model::RModel> {
    RawModel::from_json(model_json)?
        .validate()
        .map_err(Error::InvalidModel)
}

/// Forcing of `formula` at every world of the model, then the verdict.
pub fn cmd_eval(model_json: &str, formula: &str) -> Result<String> {
    let model = parse_model(model_json)?;
    let f = parse_formula(formula)?;
    let ext = model.extension(&f);
    let mut out = String::new();
    for (u, id) in model.worlds().iter().enumerate() {
        let tag = if model.root() == Some(u) { " (root)" } else { "" };
        out.push_str(&format!("{id}{tag}: {}\n", if ext.contains(u) { '+' } else { '-' }));
    }
    out.push_str(if model.valid_in(&f) { "valid\n" } else { "invalid\n" });
    Ok(out)
}

/// Bounded validity. Returns the verdict and a report.
pub fn cmd_valid(formula: &str, bound: SearchBound) -> Result<(bool, String)> {
    let f = parse_formula(formula)?;
    Ok(match find_countermodel(&f, bound) {
        None => {
            let searched = enumerate_rmodels(bound, f.max_var().max(1)).count();
            (true, format!("valid: no countermodel among {searched} models within {bound}\n"))
        }
        Some(cm) => (
            false,
            format!(
                "refuted at {} in a {}-world model\n{}\n",
                cm.world,
                cm.model.len(),
                cm.model.to_json()
            ),
        ),
    })
}

#[derive(Serialize)]
struct CountermodelJson {
    world: String,
    model: serde_json::Value,
}

/// The first countermodel within the bound as JSON, or `None`.
pub fn cmd_countermodel(formula: &str, bound: SearchBound) -> Result<Option<String>> {
    let f = parse_formula(formula)?;
    let Some(cm) = find_countermodel(&f, bound) else { return Ok(None) };
    let doc = CountermodelJson {
        world: cm.world,
        model: serde_json::from_str(&cm.model.to_json())?,
    };
    Ok(Some(serde_json::to_string_pretty(&doc)?))
}

pub fn cmd_classify(word: &str) -> Result<String> {
    let w = parse_nword(word)?;
    let (by_rules, steps) = normalize_trace(&w);
    let by_sig = normalize_semantic(&w)?;
    let mut out = format!("word: {w}\n");
    out.push_str(&format!("representative: {by_rules}\n"));
    out.push_str(&format!("by signature: {by_sig}\n"));
    out.push_str(&format!("signature: {}\n", signature(&w)));
    out.push_str(&format!(
        "irreducible: {}\n",
        if is_irreducible(&w)? { "yes" } else { "no" }
    ));
    for s in steps {
        out.push_str(&format!("  {} at {}..{}: {}\n", s.rule, s.start, s.end, s.result));
    }
    if by_rules != by_sig {
        return Err(Error::CensusInconsistency {
            word: w.to_string(),
            signature: signature(&w).to_string(),
        });
    }
    Ok(out)
}

pub fn cmd_census(max_len: usize, format: OutputFormat) -> String {
    let classes = census(max_len);
    match format {
        OutputFormat::Json => census_json(&classes) + "\n",
        _ => {
            let mut out = format!("{} classes\n", classes.len());
            for c in &classes {
                out.push_str(&format!(
                    "{:<8} {}  {} members\n",
                    c.representative.to_string(),
                    c.signature,
                    c.members.len()
                ));
            }
            out
        }
    }
}

pub fn cmd_table(max_len: usize, format: OutputFormat) -> String {
    let format = match format {
        OutputFormat::Csv => TableFormat::Csv,
        OutputFormat::Json => TableFormat::Json,
        _ => TableFormat::Markdown,
    };
    render_table(&computed_table(max_len), format)
}

pub fn cmd_errata() -> Vec<Mismatch> {
    errata()
}

pub fn render_errata(mismatches: &[Mismatch], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            serde_json::to_string_pretty(mismatches).expect("mismatches serialize") + "\n"
        }
        _ => {
            let mut out: String = mismatches.iter().map(|m| format!("{m}\n")).collect();
            out.push_str(&format!("{} mismatched cells\n", mismatches.len()));
            out
        }
    }
}

pub fn cmd_poset(include_constants: bool, format: OutputFormat) -> String {
    let poset = build_poset(include_constants);
    match format {
        OutputFormat::Json => poset.to_json() + "\n",
        _ => emit_dot(&poset),
    }
}
