//! Text and structured output for task results.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::field::{element_to_string, Field, FieldElement};
use crate::problem::TaskOutput;

fn character_list(field: &Field, values: &[FieldElement]) -> String {
    let parts: Vec<String> = values.iter().map(|v| element_to_string(field, v)).collect();
    format!("Character{{{}}}", parts.join(", "))
}

fn partition_string(p: &[usize]) -> String {
    let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn betti_table_text(rows: &[BTreeMap<i64, usize>]) -> String {
    let width = rows.len();
    let mut cells: BTreeMap<i64, Vec<Option<usize>>> = BTreeMap::new();
    let mut totals = vec![0usize; width];
    for (i, row) in rows.iter().enumerate() {
        for (&j, &count) in row {
            let d = j - i as i64;
            cells.entry(d).or_insert_with(|| vec![None; width])[i] = Some(count);
            totals[i] += count;
        }
    }
    if cells.is_empty() {
        return "total: 0\n".to_string();
    }
    let col_width: Vec<usize> = (0..width)
        .map(|i| {
            let mut w = totals[i].to_string().len().max(i.to_string().len());
            for row in cells.values() {
                if let Some(c) = row[i] {
                    w = w.max(c.to_string().len());
                }
            }
            w
        })
        .collect();
    let label_width = cells
        .keys()
        .map(|d| d.to_string().len())
        .max()
        .unwrap()
        .max(5);
    let mut out = String::new();
    out.push_str(&" ".repeat(label_width + 2));
    for i in 0..width {
        out.push_str(&format!("{:>w$} ", i, w = col_width[i]));
    }
    out.push('\n');
    out.push_str(&format!("{:>w$}: ", "total", w = label_width));
    for i in 0..width {
        out.push_str(&format!("{:>w$} ", totals[i], w = col_width[i]));
    }
    out.push('\n');
    for (d, row) in &cells {
        out.push_str(&format!("{:>w$}: ", d, w = label_width));
        for i in 0..width {
            let cell = match row[i] {
                Some(c) => c.to_string(),
                None => ".".to_string(),
            };
            out.push_str(&format!("{:>w$} ", cell, w = col_width[i]));
        }
        out.push('\n');
    }
    out
}

pub fn render_pretty(field: &Field, outputs: &[TaskOutput]) -> String {
    let mut out = String::new();
    for task in outputs {
        match task {
            TaskOutput::BettiTable { rows } => {
                out.push_str(&betti_table_text(rows));
            }
            TaskOutput::BettiCharacters {
                table, only_degree, ..
            } => {
                out.push_str("BettiCharacters{\n");
                for (i, row) in table.rows.iter().enumerate() {
                    if let Some(only) = only_degree {
                        if i != *only {
                            continue;
                        }
                    }
                    for (j, vals) in row {
                        out.push_str(&format!(
                            "  {i} => GradedCharacter{{{{{j}}} => {}}}\n",
                            character_list(field, vals)
                        ));
                    }
                }
                out.push_str("}\n");
            }
            TaskOutput::ModuleCharacter { values, .. } => {
                for (j, vals) in values {
                    out.push_str(&format!(
                        "GradedCharacter{{{{{j}}} => {}}}\n",
                        character_list(field, vals)
                    ));
                }
            }
            TaskOutput::MolienCheck { checks } => {
                for (name, ok) in checks {
                    out.push_str(&format!(
                        "molien check {name}: {}\n",
                        if *ok { "ok" } else { "FAILED" }
                    ));
                }
            }
            TaskOutput::Decompose { rows } => {
                for (i, j, decomp) in rows {
                    out.push_str(&format!("decomposition at i={i} {{{j}}}:\n"));
                    for (lambda, mult) in decomp {
                        out.push_str(&format!(
                            "  {} => {}\n",
                            partition_string(lambda),
                            element_to_string(field, mult)
                        ));
                    }
                }
            }
        }
        out.push('\n');
    }
    out
}

fn values_json(field: &Field, names: &[String], values: &[FieldElement]) -> Value {
    Value::Array(
        names
            .iter()
            .zip(values)
            .map(|(n, v)| json!({"element": n, "value": element_to_string(field, v)}))
            .collect(),
    )
}

pub fn render_structured(field: &Field, outputs: &[TaskOutput]) -> Value {
    let tasks: Vec<Value> = outputs
        .iter()
        .map(|task| match task {
            TaskOutput::BettiTable { rows } => {
                let rows_json: Vec<Value> = rows
                    .iter()
                    .enumerate()
                    .map(|(i, row)| {
                        let entries: Vec<Value> = row
                            .iter()
                            .map(|(j, c)| json!({"degree": j, "rank": c}))
                            .collect();
                        json!({"homological_degree": i, "entries": entries})
                    })
                    .collect();
                json!({"kind": "betti-table", "rows": rows_json})
            }
            TaskOutput::BettiCharacters {
                names,
                table,
                only_degree,
            } => {
                let mut rows_json = Vec::new();
                for (i, row) in table.rows.iter().enumerate() {
                    if let Some(only) = only_degree {
                        if i != *only {
                            continue;
                        }
                    }
                    for (j, vals) in row {
                        rows_json.push(json!({
                            "homological_degree": i,
                            "degree": j,
                            "character": values_json(field, names, vals),
                        }));
                    }
                }
                json!({"kind": "betti-characters", "rows": rows_json})
            }
            TaskOutput::ModuleCharacter { names, values } => {
                let rows: Vec<Value> = values
                    .iter()
                    .map(|(j, vals)| {
                        json!({"degree": j, "character": values_json(field, names, vals)})
                    })
                    .collect();
                json!({"kind": "module-character", "rows": rows})
            }
            TaskOutput::MolienCheck { checks } => {
                let rows: Vec<Value> = checks
                    .iter()
                    .map(|(n, ok)| json!({"element": n, "holds": ok}))
                    .collect();
                json!({"kind": "molien-check", "checks": rows})
            }
            TaskOutput::Decompose { rows } => {
                let rows_json: Vec<Value> = rows
                    .iter()
                    .map(|(i, j, decomp)| {
                        let mults: Vec<Value> = decomp
                            .iter()
                            .map(|(lambda, m)| {
                                json!({"partition": lambda, "multiplicity": element_to_string(field, m)})
                            })
                            .collect();
                        json!({"homological_degree": i, "degree": j, "multiplicities": mults})
                    })
                    .collect();
                json!({"kind": "decompose", "rows": rows_json})
            }
        })
        .collect();
    json!({"tasks": tasks})
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::{load_problem, run_problem, RunOptions};

    const SRC: &str = r#"
[ring]
variables = ["x", "y", "z"]

[[define]]
name = "I"
ideal = ["x*y", "x*z", "y*z"]

[module]
quotient_of = "I"

[[group.element]]
name = "id"
sub = ["x", "y", "z"]

[[group.element]]
name = "(12)"
sub = ["y", "x", "z"]

[[group.element]]
name = "(123)"
sub = ["y", "z", "x"]

[[task]]
kind = "betti-table"

[[task]]
kind = "betti-characters"
"#;

    #[test]
    fn pretty_output_shape() {
        let p = load_problem(SRC).unwrap();
        let out = run_problem(&p, &RunOptions::default()).unwrap();
        let text = render_pretty(&p.field, &out);
        assert!(text.contains("total: 1 3 2"));
        assert!(
            text.contains("{2}} => Character{3, 1, 0}")
                || text.contains("{{2} => Character{3, 1, 0}}")
        );
        assert!(text.contains("{{3} => Character{2, 0, -1}}"));
    }

    #[test]
    fn structured_round_trip() {
        let p = load_problem(SRC).unwrap();
        let out = run_problem(&p, &RunOptions::default()).unwrap();
        let doc = render_structured(&p.field, &out);
        let rows = doc["tasks"][1]["rows"].as_array().unwrap();
        let last = rows.last().unwrap();
        assert_eq!(last["degree"], 3);
        let ch = last["character"].as_array().unwrap();
        assert_eq!(ch[0]["element"], "id");
        // values re-parse to the original field elements
        for (v, want) in ch.iter().zip(["2", "0", "-1"]) {
            let parsed =
                crate::parse::element_parse(v["value"].as_str().unwrap(), &p.field).unwrap();
            assert_eq!(parsed, crate::parse::element_parse(want, &p.field).unwrap());
        }
    }
}
