use serde_json::Value;

/// Plain-text rendering of a report: scalars as `key: value`, lists of
/// objects as aligned columns.
pub fn render_table(v: &Value) -> String {
    let mut out = String::new();
    render(v, 0, &mut out);
    out
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            a.iter().map(scalar).collect::<Vec<_>>().join(",")
        }
        Value::Array(a) if a.iter().all(|x| x.as_array().is_some_and(|r| r.iter().all(|y| !y.is_object()))) => {
            a.iter().map(|x| format!("({})", scalar(x))).collect::<Vec<_>>().join(" ")
        }
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    !v.is_object() && !matches!(v, Value::Array(a) if a.iter().any(|x| x.is_object()))
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(m) => {
            let width = m.keys().map(|k| k.len()).max().unwrap_or(0);
            for (k, x) in m {
                if is_flat(x) {
                    out.push_str(&format!("{pad}{k:width$}  {}\n", scalar(x)));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render(x, indent + 2, out);
                }
            }
        }
        Value::Array(rows) if rows.iter().all(|x| x.is_object()) && !rows.is_empty() => {
            let header: Vec<&String> = rows[0].as_object().unwrap().keys().collect();
            if rows.iter().flat_map(|r| r.as_object().unwrap().values()).all(is_flat) {
                let cells: Vec<Vec<String>> =
                    rows.iter().map(|r| header.iter().map(|h| scalar(&r[h.as_str()])).collect()).collect();
                let widths: Vec<usize> = (0..header.len())
                    .map(|i| cells.iter().map(|c| c[i].len()).chain([header[i].len()]).max().unwrap())
                    .collect();
                let line = |c: Vec<String>| {
                    c.iter().zip(&widths).map(|(s, w)| format!("{s:w$}")).collect::<Vec<_>>().join("  ").trim_end().to_string()
                };
                out.push_str(&format!("{pad}{}\n", line(header.iter().map(|h| h.to_string()).collect())));
                for c in cells {
                    out.push_str(&format!("{pad}{}\n", line(c)));
                }
            } else {
                for r in rows {
                    render(r, indent, out);
                    out.push('\n');
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn tables() {
        let v = json!({"dim_J": 0, "b": [1, 2], "rows": [{"n": 1, "d": 10}, {"n": 12, "d": 2}]});
        assert_eq!(render_table(&v), "b      1,2\ndim_J  0\nrows:\n  d   n\n  10  1\n  2   12\n");
    }
}
