//! wasm-bindgen bindings for the browser demo in `www/`.
//!
//! Each export returns a JSON string laid out for a coefficient heat map:
//! one row per Schur function (or partition pair), one column per power of `q`.

use deltaq::delta::{claimed_qdegree, delta_prime_schur_t0};
use deltaq::json::ToJson;
use deltaq::osp::{c_degree, c_via_qprime};
use deltaq::partitions::enumerate_partitions;
use deltaq::tableaux::kostka_foulkes;
use deltaq::{Error, Partition, QLaurent, SymFunc};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Inputs above this size make the page unresponsive.
const MAX_N: usize = 8;

fn check_n(n: usize) -> Result<(), Error> {
    if n == 0 || n > MAX_N {
        return Err(Error::Range(format!("n must be between 1 and {MAX_N}")));
    }
    Ok(())
}

/// Integer coefficients `[c_0, ..., c_max]` of a polynomial in `q`.
fn dense(c: &QLaurent, max: i64) -> Vec<String> {
    (0..=max).map(|e| c.coeff(e).to_string()).collect()
}

fn grid(rows: Vec<(String, QLaurent)>) -> Value {
    let max = rows
        .iter()
        .filter_map(|(_, c)| c.max_exp())
        .max()
        .unwrap_or(0);
    let rows: Vec<Value> = rows
        .into_iter()
        .map(|(label, c)| json!({"label": label, "coeffs": dense(&c, max), "text": c.to_string()}))
        .collect();
    json!({"max_exp": max, "rows": rows})
}

fn symfunc_view(f: &SymFunc, degree: i64) -> Value {
    let rows = f
        .terms()
        .map(|(mu, c)| (format!("s{mu}"), c.clone()))
        .collect();
    json!({
        "text": f.to_string(),
        "qdegree": degree,
        "grid": grid(rows),
        "value": f.to_json(),
    })
}

/// `C_{n,k}` in the Schur basis.
pub fn c_nk_json(n: usize, k: usize) -> Result<String, Error> {
    check_n(n)?;
    if k < 1 || k > n {
        return Err(Error::Range(format!("need 1 <= k <= n, got k={k}")));
    }
    let c = c_via_qprime(n, k)?;
    Ok(symfunc_view(&c, c_degree(n, k)).to_string())
}

/// `Δ'_{s_ν} e_n |_{t=0}` in the Schur basis; `nu` is comma separated.
pub fn delta_prime_schur_json(nu: &str, n: usize) -> Result<String, Error> {
    check_n(n)?;
    let nu: Partition = nu.parse()?;
    if nu.size() > MAX_N {
        return Err(Error::Range(format!("|nu| must be at most {MAX_N}")));
    }
    let d = delta_prime_schur_t0(&nu, n)?;
    Ok(symfunc_view(&d, claimed_qdegree(&nu, n)).to_string())
}

/// All `K_{λμ}(q)` with `λ, μ ⊢ n` and `λ ⊵ μ`.
pub fn kostka_foulkes_json(n: usize) -> Result<String, Error> {
    check_n(n)?;
    let shapes = enumerate_partitions(n, None);
    let mut rows = Vec::new();
    for lam in &shapes {
        for mu in shapes.iter().filter(|mu| lam.dominates(mu)) {
            rows.push((format!("K{lam}{mu}"), kostka_foulkes(lam, mu)?));
        }
    }
    Ok(json!({"grid": grid(rows)}).to_string())
}

fn to_js(r: Result<String, Error>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e.to_string()))
}

#[wasm_bindgen]
pub fn c_nk(n: usize, k: usize) -> Result<String, JsValue> {
    to_js(c_nk_json(n, k))
}

#[wasm_bindgen]
pub fn delta_prime_schur(nu: &str, n: usize) -> Result<String, JsValue> {
    to_js(delta_prime_schur_json(nu, n))
}

#[wasm_bindgen]
pub fn kostka_foulkes_table(n: usize) -> Result<String, JsValue> {
    to_js(kostka_foulkes_json(n))
}
