use serde_json::Value;

use super::{CatalogCommand, Command, CommandResult, Status};
use crate::algebra::AlgebraStructure;
use crate::exactnum::{format_rational, Rational};

fn term(c: &Rational, k: usize) -> String {
    let one = Rational::from_integer(1.into());
    if *c == one {
        format!("e{}", k + 1)
    } else if *c == -one {
        format!("-e{}", k + 1)
    } else {
        format!("{}e{}", format_rational(c), k + 1)
    }
}

/// `e1·e2 = 2e2` lines for every nonzero product.
pub fn multiplication_table(alg: &AlgebraStructure) -> String {
    let n = alg.dim();
    let mut lines = vec![format!("{} (dim {n})", alg.name().unwrap_or("algebra"))];
    for i in 0..n {
        for j in 0..n {
            let parts: Vec<String> = alg
                .product(i, j)
                .iter()
                .enumerate()
                .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                .map(|(k, c)| term(c, k))
                .collect();
            if !parts.is_empty() {
                lines.push(format!("  e{}·e{} = {}", i + 1, j + 1, parts.join(" + ").replace("+ -", "- ")));
            }
        }
    }
    if lines.len() == 1 {
        lines.push("  all products zero".into());
    }
    lines.join("\n")
}

fn verdicts(payload: &Value) -> String {
    let Some(map) = payload.get("verdicts").and_then(Value::as_object) else {
        return String::new();
    };
    let width = map.keys().map(String::len).max().unwrap_or(0);
    map.iter()
        .map(|(k, v)| format!("{k:width$}  {}", if v.as_bool() == Some(true) { "holds" } else { "FAILS" }))
        .collect::<Vec<_>>()
        .join("\n")
}

fn catalog_list(payload: &Value) -> String {
    let mut lines = Vec::new();
    for f in payload.as_array().into_iter().flatten() {
        let params: Vec<&str> = f["params"].as_array().into_iter().flatten().filter_map(Value::as_str).collect();
        lines.push(format!(
            "{:<22} {:<8} {:<15} {}",
            f["name"].as_str().unwrap_or(""),
            params.join(","),
            f["source"].as_str().unwrap_or(""),
            f["description"].as_str().unwrap_or("")
        ));
    }
    lines.join("\n")
}

pub fn render(command: &Command, result: &CommandResult) -> String {
    if result.status == Status::Error {
        return result.diagnostics.iter().map(|d| format!("error: {d}")).collect::<Vec<_>>().join("\n");
    }
    let p = &result.payload;
    let body = match command {
        Command::Check { .. } => verdicts(p),
        Command::Catalog { action: CatalogCommand::List } => catalog_list(p),
        Command::Catalog { action: CatalogCommand::Show { .. } } => match serde_json::from_value::<AlgebraStructure>(p.clone()) {
            Ok(alg) => multiplication_table(&alg),
            Err(_) => serde_json::to_string_pretty(p).unwrap_or_default(),
        },
        Command::Split { .. } => {
            let part = |key: &str| {
                serde_json::from_value::<AlgebraStructure>(p[key].clone()).map(|a| multiplication_table(&a)).unwrap_or_default()
            };
            format!("bracket: {}\nproduct: {}\nlie type: {}", part("bracket"), part("product"), p["lie_type"])
        }
        Command::Symalg { .. } => {
            let labels: Vec<&str> = p["basis"].as_array().into_iter().flatten().filter_map(Value::as_str).collect();
            let bracket = serde_json::from_value::<AlgebraStructure>(p["pair"]["bracket"].clone())
                .map(|a| multiplication_table(&a))
                .unwrap_or_default();
            let index: Vec<String> = labels.iter().enumerate().map(|(i, l)| format!("e{} = {l}", i + 1)).collect();
            format!("basis: {}
bracket: {bracket}", index.join(", "))
        }
        _ => serde_json::to_string_pretty(p).unwrap_or_default(),
    };
    let notes = result.diagnostics.iter().map(|d| format!("note: {d}"));
    std::iter::once(body).chain(notes).collect::<Vec<_>>().join("\n")
}
