//! Browser bindings: three small JSON-returning entry points behind a static
//! page. The plain functions are what the tests exercise; the exported
//! wrappers only convert errors into JS exceptions.

use macwheel::current_algebra::chi_c;
use macwheel::linalg::RankMode;
use macwheel::macdonald::{compute_p, specialize_p, MacdonaldTable};
use macwheel::partitions::{enumerate_admissible, Partition};
use macwheel::scalars::ParameterSpec;
use macwheel::wheel_ideal::dim_j;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

// Generic P_λ grows quickly; keep the page responsive.
const MAX_N: usize = 4;
const MAX_SIZE: u32 = 8;

fn limits(n: usize, size: u32) -> Result<(), String> {
    if n > MAX_N || size > MAX_SIZE {
        return Err(format!("the demo is limited to n ≤ {MAX_N} and degree ≤ {MAX_SIZE}"));
    }
    Ok(())
}

fn spec(k: u32, r: u32) -> Result<ParameterSpec, String> {
    ParameterSpec::new(k, r).map_err(|e| e.to_string())
}

/// P_λ in n variables over ℚ(q,t), or at the resonance when `k` and `r` are
/// both nonzero.
pub fn macdonald_json(lambda: &str, n: usize, k: u32, r: u32) -> Result<Value, String> {
    let lambda: Partition = lambda.parse().map_err(|e: macwheel::Error| e.to_string())?;
    limits(n, lambda.size())?;
    let mut table = MacdonaldTable::new(n);
    let coefficients = if k == 0 && r == 0 {
        compute_p(&lambda, n, &mut table).map_err(|e| e.to_string())?.to_json()
    } else {
        let p = spec(k, r)?;
        specialize_p(&lambda, n, &p, &mut table).map_err(|e| e.to_string())?.to_json()
    };
    Ok(json!({
        "lambda": lambda.to_padded_string(n),
        "n": n,
        "admissible": k > 0 && lambda.is_admissible(k as usize, r, n),
        "coefficients": coefficients,
    }))
}

/// dim J_{n,d} for every d ≤ d_max next to the admissible partitions.
pub fn wheel_report_json(k: u32, r: u32, n: usize, d_max: u32) -> Result<Value, String> {
    limits(n, d_max)?;
    let p = spec(k, r)?;
    let mut rows = Vec::new();
    for d in 0..=d_max {
        let adm = enumerate_admissible(k as usize, r, n, d);
        let dim = dim_j(&p, n, d, RankMode::Exact).map_err(|e| e.to_string())?;
        rows.push(json!({
            "d": d,
            "dim_J": dim.dim,
            "ambient": dim.ambient,
            "admissible": adm.iter().map(|l| l.to_padded_string(n)).collect::<Vec<_>>(),
            "equal": dim.dim == adm.len(),
        }));
    }
    Ok(json!({"k": k, "r": r, "n": n, "rows": rows}))
}

/// Coefficients c_{d,n} of the degree-sequence character as a d × n grid.
pub fn character_table_json(b: &str, k: u32, r: u32, d_max: u32, n_max: u32) -> Result<Value, String> {
    if d_max > 24 || n_max > 12 {
        return Err("the demo is limited to d ≤ 24 and n ≤ 12".into());
    }
    let b: Vec<u32> = b
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| format!("bad profile entry '{x}'")))
        .collect::<Result<_, _>>()?;
    let chi = chi_c(&b, k, r, d_max, n_max).map_err(|e| e.to_string())?;
    let grid: Vec<Vec<u64>> = (0..=d_max).map(|d| (0..=n_max).map(|n| chi.coeff(d, n)).collect()).collect();
    Ok(json!({"b": b, "k": k, "r": r, "grid": grid}))
}

fn export(v: Result<Value, String>) -> Result<String, JsValue> {
    v.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn macdonald(lambda: &str, n: usize, k: u32, r: u32) -> Result<String, JsValue> {
    export(macdonald_json(lambda, n, k, r))
}

#[wasm_bindgen]
pub fn wheel_report(k: u32, r: u32, n: usize, d_max: u32) -> Result<String, JsValue> {
    export(wheel_report_json(k, r, n, d_max))
}

#[wasm_bindgen]
pub fn character_table(b: &str, k: u32, r: u32, d_max: u32, n_max: u32) -> Result<String, JsValue> {
    export(character_table_json(b, k, r, d_max, n_max))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn macdonald_generic_and_specialized() {
        let v = macdonald_json("2", 2, 0, 0).unwrap();
        assert_eq!(v["coefficients"].as_array().unwrap().len(), 2);
        let s = macdonald_json("4,2", 3, 1, 2).unwrap();
        assert_eq!(s["admissible"], true);
        assert!(macdonald_json("2,1", 3, 1, 2).unwrap_err().contains("pole"));
        assert!(macdonald_json("9", 2, 0, 0).is_err());
    }

    #[test]
    fn wheel_rows_match_admissible_counts() {
        let v = wheel_report_json(1, 2, 3, 6).unwrap();
        for row in v["rows"].as_array().unwrap() {
            assert_eq!(row["equal"], true);
        }
        assert_eq!(v["rows"][6]["dim_J"], 1);
    }

    #[test]
    fn character_grid() {
        let v = character_table_json("1", 1, 2, 4, 2).unwrap();
        assert_eq!(v["grid"][0][0], 1);
        assert_eq!(v["grid"][3][1], 1);
        assert!(character_table_json("2", 1, 2, 4, 2).is_err());
    }
}
