//! Bounded exhaustive checking of the identities.
//!
//! Every identity expands to a deterministic list of instances. Instances are
//! evaluated on a rayon pool of the requested width; the report lists
//! failures in instance order, so the output does not depend on scheduling.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::delta::{
    delta_prime_elem_t0, delta_prime_schur_t0, delta_unprimed_schur_t0, grfrob_r_nnu, lemma41_rhs,
    prop51_lhs, prop51_rhs, prop52_check, rev_omega_delta, simple2_rhs, theorem12_rhs, DeltaResult,
};
use crate::error::{Error, Result};
use crate::hypergeo::{lemma32_check, lemma32_tuples, lemma33_check, lemma33_tuples};
use crate::osp::{
    c_poly, c_via_osp, c_via_qprime, compositions, d_poly, schur_inner_with_e, shuffle_inner,
};
use crate::partitions::{enumerate_partitions, Partition};
use crate::qarith::{binomial, q_binomial, Rational};
use crate::symfun::{e_multiply, e_perp, expand_in_vars, hall_inner, omega, BiSymFunc, SymFunc};
use crate::tableaux::{kostka_foulkes, kostka_number, principal_spec_schur};

macro_rules! identities {
    ($($variant:ident => $name:literal, ($n:expr, $m:expr, $j:expr);)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
        pub enum Identity {
            $($variant,)*
        }

        impl Identity {
            pub const ALL: &'static [Identity] = &[$(Identity::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(Identity::$variant => $name,)*
                }
            }

            /// Default `(max_n, max_m, max_j)`.
            pub fn default_bounds(self) -> (usize, usize, usize) {
                match self {
                    $(Identity::$variant => ($n, $m, $j),)*
                }
            }
        }
    };
}

identities! {
    Theorem12 => "theorem-1-2", (6, 4, 0);
    Theorem13 => "theorem-1-3", (5, 3, 0);
    Theorem42 => "theorem-4-2", (7, 0, 0);
    Lemma23 => "lemma-2-3", (7, 0, 0);
    Lemma31 => "lemma-3-1", (7, 0, 0);
    Lemma32 => "lemma-3-2", (0, 0, 3);
    Lemma33 => "lemma-3-3", (8, 0, 0);
    Lemma41 => "lemma-4-1", (7, 0, 0);
    Prop51 => "prop-5-1", (5, 3, 0);
    Prop52 => "prop-5-2", (5, 3, 0);
    Simple2 => "simple-2", (0, 5, 6);
    DegreeClaim => "degree-claim", (6, 4, 0);
    Positivity => "positivity", (6, 4, 0);
    OspVsQprime => "osp-vs-qprime", (7, 0, 0);
    ShuffleInner => "shuffle-inner", (6, 0, 0);
    Adjointness => "adjointness", (6, 0, 0);
    KostkaFoulkes => "kostka-foulkes", (6, 0, 0);
    QBinomial => "q-binomial", (12, 0, 0);
    OmegaInvolution => "omega-involution", (6, 0, 0);
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .iter()
            .copied()
            .find(|i| i.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Identity::ALL.iter().map(|i| i.name()).collect();
                Error::Parse(format!(
                    "unknown identity {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

/// Optional overrides of the per-identity default bounds.
#[derive(Clone, Copy, Debug, Default)]
pub struct Bounds {
    pub max_n: Option<usize>,
    pub max_m: Option<usize>,
    pub max_j: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ResolvedBounds {
    pub max_n: usize,
    pub max_m: usize,
    pub max_j: usize,
}

const MAX_N: usize = 12;
const MAX_M: usize = 8;
const MAX_J: usize = 8;

impl Bounds {
    pub fn resolve(&self, id: Identity) -> Result<ResolvedBounds> {
        let (n, m, j) = id.default_bounds();
        let r = ResolvedBounds {
            max_n: self.max_n.unwrap_or(n),
            max_m: self.max_m.unwrap_or(m),
            max_j: self.max_j.unwrap_or(j),
        };
        if r.max_n > MAX_N || r.max_m > MAX_M || r.max_j > MAX_J {
            return Err(Error::Range(format!(
                "bounds exceed the supported maxima (n <= {MAX_N}, m <= {MAX_M}, j <= {MAX_J})"
            )));
        }
        if self.max_n == Some(0) && n > 0 {
            return Err(Error::Range("max-n must be positive".into()));
        }
        Ok(r)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub instance: Map<String, Value>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub identity: String,
    pub bounds: ResolvedBounds,
    pub instances_checked: usize,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
    pub elapsed_seconds: f64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} ({} instances, {} failures, {:.2}s)",
            self.identity,
            if self.passed() { "PASS" } else { "FAIL" },
            self.instances_checked,
            self.failures.len(),
            self.elapsed_seconds
        )
    }
}

type Outcome = Result<Option<String>>;
type Check = Box<dyn Fn() -> Outcome + Send + Sync>;

struct Instance {
    key: Vec<(&'static str, Value)>,
    check: Check,
}

fn inst(
    key: Vec<(&'static str, Value)>,
    check: impl Fn() -> Outcome + Send + Sync + 'static,
) -> Instance {
    Instance {
        key,
        check: Box::new(check),
    }
}

fn pv(p: &Partition) -> Value {
    Value::from(p.parts().to_vec())
}

fn same_sym(lhs: &SymFunc, rhs: &SymFunc) -> Option<String> {
    (lhs != rhs).then(|| format!("lhs - rhs = {}", lhs - rhs))
}

fn same_bisym(lhs: &BiSymFunc, rhs: &BiSymFunc) -> Option<String> {
    (lhs != rhs).then(|| {
        let mut d = lhs.clone();
        d.add(&rhs.map_coeffs(|c| -c));
        format!("lhs - rhs = {d:?}")
    })
}

fn all_partitions_up_to(m: usize) -> Vec<Partition> {
    (0..=m)
        .flat_map(|s| enumerate_partitions(s, None))
        .collect()
}

fn nu_n_grid(b: ResolvedBounds) -> Vec<(Partition, usize)> {
    let mut out = Vec::new();
    for nu in all_partitions_up_to(b.max_m) {
        for n in 1..=b.max_n {
            out.push((nu.clone(), n));
        }
    }
    out
}

fn nk_grid(max_n: usize) -> Vec<(usize, usize)> {
    (1..=max_n)
        .flat_map(|n| (1..=n).map(move |k| (n, k)))
        .collect()
}

fn lemma31_rhs(n: usize, k: usize, j: usize) -> Result<SymFunc> {
    let (ki, ji) = (k as i64, j as i64);
    let mut out = SymFunc::zero(n - j);
    for r in 0..=j.min(k) {
        let ri = r as i64;
        let c = &q_binomial(ki, ri)? * &q_binomial(ki + ji - ri - 1, ji - ri)?;
        out += &c_poly(n - j, k - r).scale(&c.shift(binomial(ri, 2)));
    }
    Ok(out)
}

fn lemma23_rhs(n: usize, k: usize, j: usize) -> Result<SymFunc> {
    let (ni, ki, ji) = (n as i64, k as i64, j as i64);
    let mut out = SymFunc::zero(n - j);
    for m in (ki - ji).max(1)..=ki.min(ni - ji) {
        let c = q_binomial(ji, ki - m)?.shift((ki - m) * (ni - ji - m));
        out += &d_poly(n - j, m as usize)?.scale(&c);
    }
    let pre = q_binomial(ki, ji)?.shift(binomial(ji, 2));
    Ok(out.scale(&pre))
}

fn instances(id: Identity, b: ResolvedBounds) -> Vec<Instance> {
    let mut out = Vec::new();
    match id {
        Identity::Theorem12 => {
            for (nu, n) in nu_n_grid(b) {
                let key = vec![("nu", pv(&nu)), ("n", n.into())];
                out.push(inst(key, move || {
                    Ok(same_sym(
                        &omega(&delta_prime_schur_t0(&nu, n)?),
                        &theorem12_rhs(&nu, n)?,
                    ))
                }));
            }
        }
        Identity::Theorem13 => {
            for (nu, n) in nu_n_grid(b) {
                let key = vec![("nu", pv(&nu)), ("n", n.into())];
                out.push(inst(key, move || {
                    Ok(same_sym(&rev_omega_delta(&nu, n)?, &grfrob_r_nnu(&nu, n)?))
                }));
            }
        }
        Identity::Theorem42 => {
            for (n, k) in nk_grid(b.max_n) {
                out.push(inst(vec![("n", n.into()), ("k", k.into())], move || {
                    let c = c_via_qprime(n, k)?;
                    if let Some(d) = same_sym(&delta_prime_elem_t0(k, n)?, &c) {
                        return Ok(Some(format!("delta vs Q' route: {d}")));
                    }
                    Ok((expand_in_vars(&c, n) != c_via_osp(n, k, n)?)
                        .then(|| "ordered set partition route differs from Q' route".to_string()))
                }));
            }
        }
        Identity::OspVsQprime => {
            for (n, k) in nk_grid(b.max_n) {
                out.push(inst(vec![("n", n.into()), ("k", k.into())], move || {
                    let c = c_via_qprime(n, k)?;
                    Ok((expand_in_vars(&c, n) != c_via_osp(n, k, n)?)
                        .then(|| "monomial expansions differ".to_string()))
                }));
            }
        }
        Identity::Lemma23 | Identity::Lemma31 => {
            for n in 2..=b.max_n {
                for j in 1..n {
                    for k in 1..=n {
                        let key = vec![("n", n.into()), ("k", k.into()), ("j", j.into())];
                        out.push(inst(key, move || {
                            if id == Identity::Lemma31 {
                                Ok(same_sym(&e_perp(j, &c_poly(n, k)), &lemma31_rhs(n, k, j)?))
                            } else {
                                Ok(same_sym(&e_perp(j, &d_poly(n, k)?), &lemma23_rhs(n, k, j)?))
                            }
                        }));
                    }
                }
            }
        }
        Identity::Lemma32 => unreachable!("handled by run_lemma32"),
        Identity::Lemma33 => {
            for p in lemma33_tuples(b.max_n) {
                let key = vec![
                    ("n", p.n.into()),
                    ("k", p.k.into()),
                    ("j", p.j.into()),
                    ("p", p.p.into()),
                ];
                out.push(inst(key, move || {
                    let (l, r) = lemma33_check(p)?;
                    Ok((l != r).then(|| format!("lhs = {l}, rhs = {r}")))
                }));
            }
        }
        Identity::Lemma41 => {
            for (n, k) in nk_grid(b.max_n) {
                out.push(inst(vec![("n", n.into()), ("k", k.into())], move || {
                    Ok(same_sym(&delta_prime_elem_t0(k, n)?, &lemma41_rhs(k, n)?))
                }));
            }
        }
        Identity::Prop51 | Identity::Prop52 => {
            for m in 0..=b.max_m {
                for n in 1..=b.max_n {
                    out.push(inst(vec![("m", m.into()), ("n", n.into())], move || {
                        if id == Identity::Prop51 {
                            Ok(same_bisym(&prop51_lhs(m, n)?, &prop51_rhs(m, n)?))
                        } else {
                            let (l, r) = prop52_check(m, n)?;
                            Ok(same_bisym(&l, &r))
                        }
                    }));
                }
            }
        }
        Identity::Simple2 => {
            for nu in all_partitions_up_to(b.max_m) {
                for j in 0..=b.max_j {
                    let nu = nu.clone();
                    out.push(inst(vec![("nu", pv(&nu)), ("j", j.into())], move || {
                        let l = principal_spec_schur(&nu, j, 0);
                        let r = simple2_rhs(&nu, j)?;
                        Ok((l != r).then(|| format!("lhs = {l}, rhs = {r}")))
                    }));
                }
            }
        }
        Identity::DegreeClaim => {
            for (nu, n) in nu_n_grid(b) {
                out.push(inst(vec![("nu", pv(&nu)), ("n", n.into())], move || {
                    let r = DeltaResult::compute(&nu, n)?;
                    Ok((!r.degree_claim_holds()).then(|| {
                        format!(
                            "q-degree {:?}, expected {}",
                            r.value.q_degree(),
                            r.claimed_qdegree
                        )
                    }))
                }));
            }
        }
        Identity::Positivity => {
            for (nu, n) in nu_n_grid(b) {
                out.push(inst(vec![("nu", pv(&nu)), ("n", n.into())], move || {
                    // Both evaluations raise a negativity error on failure.
                    delta_prime_schur_t0(&nu, n)?;
                    let u = delta_unprimed_schur_t0(&nu, n)?;
                    Ok((!u.is_schur_positive())
                        .then(|| "unprimed operator not Schur positive".into()))
                }));
            }
        }
        Identity::ShuffleInner => {
            for (n, k) in nk_grid(b.max_n) {
                for alpha in compositions(n) {
                    let key = vec![
                        ("n", n.into()),
                        ("k", k.into()),
                        ("alpha", Value::from(alpha.clone())),
                    ];
                    out.push(inst(key, move || {
                        let l = shuffle_inner(n, k, &alpha)?;
                        let r = schur_inner_with_e(n, k, &alpha)?;
                        Ok((l != r).then(|| format!("shuffle count {l}, Hall inner product {r}")))
                    }));
                }
            }
        }
        Identity::Adjointness => {
            for d in 0..=b.max_n {
                for j in 0..=d {
                    let key = vec![("degree", d.into()), ("j", j.into())];
                    out.push(inst(key, move || {
                        for lam in enumerate_partitions(d, None) {
                            for mu in enumerate_partitions(d - j, None) {
                                let (sl, sm) =
                                    (SymFunc::schur(lam.clone()), SymFunc::schur(mu.clone()));
                                let l = hall_inner(&e_multiply(j, &sm), &sl)?;
                                let r = hall_inner(&sm, &e_perp(j, &sl))?;
                                if l != r {
                                    return Ok(Some(format!("lambda {lam}, mu {mu}: {l} vs {r}")));
                                }
                            }
                        }
                        Ok(None)
                    }));
                }
            }
        }
        Identity::KostkaFoulkes => {
            for s in 0..=b.max_n {
                for lam in enumerate_partitions(s, None) {
                    for mu in enumerate_partitions(s, None) {
                        let key = vec![("lam", pv(&lam)), ("mu", pv(&mu))];
                        let lam = lam.clone();
                        out.push(inst(key, move || {
                            let kf = kostka_foulkes(&lam, &mu)?;
                            if !kf.is_nonneg_integral_polynomial() {
                                return Ok(Some(format!("not a nonnegative polynomial: {kf}")));
                            }
                            if kf.eval_at_one()
                                != Rational::from_integer(kostka_number(&lam, &mu)?.into())
                            {
                                return Ok(Some(format!(
                                    "K(1) = {} differs from the Kostka number",
                                    kf.eval_at_one()
                                )));
                            }
                            if !lam.dominates(&mu) && !kf.is_zero() {
                                return Ok(Some("nonzero without dominance".into()));
                            }
                            Ok((lam == mu && !kf.is_one())
                                .then(|| "diagonal entry is not 1".into()))
                        }));
                    }
                }
            }
        }
        Identity::QBinomial => {
            for n in 0..=b.max_n as i64 {
                for k in 0..=n {
                    out.push(inst(vec![("n", n.into()), ("k", k.into())], move || {
                        let c = q_binomial(n, k)?;
                        if c != q_binomial(n, n - k)? {
                            return Ok(Some("not symmetric in k and n-k".into()));
                        }
                        if !c.is_palindromic() || c.max_exp() != Some(k * (n - k)) {
                            return Ok(Some(format!("not palindromic of degree k(n-k): {c}")));
                        }
                        Ok(
                            (c.eval_at_one() != Rational::from_integer(binomial(n, k).into()))
                                .then(|| "value at q = 1 is not the binomial coefficient".into()),
                        )
                    }));
                }
            }
        }
        Identity::OmegaInvolution => {
            for (n, k) in nk_grid(b.max_n) {
                out.push(inst(vec![("n", n.into()), ("k", k.into())], move || {
                    let c = c_poly(n, k);
                    if omega(&omega(&c)) != c {
                        return Ok(Some("omega is not an involution".into()));
                    }
                    for lam in enumerate_partitions(n, None) {
                        if omega(&SymFunc::schur(lam.clone())) != SymFunc::schur(lam.conjugate()) {
                            return Ok(Some(format!("omega s_{lam} is not s of the conjugate")));
                        }
                    }
                    Ok(None)
                }));
            }
        }
    }
    out
}

fn key_map(key: Vec<(&'static str, Value)>) -> Map<String, Value> {
    key.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Precondition(format!("cannot start worker pool: {e}")))
}

/// The 3φ2 transformation is checked in two forms at once. The identity passes when at
/// least one form holds at every defined tuple; the notes say which.
fn run_lemma32(b: ResolvedBounds, jobs: usize) -> Result<(usize, Vec<Failure>, Vec<String>)> {
    let tuples = lemma32_tuples(b.max_j, LEMMA32_RANGE);
    let outcomes: Vec<_> =
        pool(jobs)?.install(|| tuples.par_iter().map(|&p| lemma32_check(p).ok()).collect());
    let defined: Vec<_> = tuples
        .iter()
        .zip(&outcomes)
        .filter_map(|(p, o)| o.map(|o| (p, o)))
        .collect();
    let published = defined.iter().filter(|(_, o)| o.published).count();
    let proof_form = defined.iter().filter(|(_, o)| o.proof_form).count();
    let mut notes = vec![
        format!(
            "parameters alpha, x, y, z in {}..={}; {} tuples skipped for vanishing denominators",
            LEMMA32_RANGE.start(),
            LEMMA32_RANGE.end(),
            tuples.len() - defined.len()
        ),
        format!(
            "published form (q^(-y-z-j+1))_j holds at {published}/{} tuples",
            defined.len()
        ),
        format!(
            "proof form (q^(-x-z-j+1))_j holds at {proof_form}/{} tuples",
            defined.len()
        ),
    ];
    let mut failures = Vec::new();
    if published < defined.len() && proof_form < defined.len() {
        for (p, o) in &defined {
            if !o.published && !o.proof_form {
                failures.push(Failure {
                    instance: key_map(vec![
                        ("j", p.j.into()),
                        ("alpha", p.alpha.into()),
                        ("x", p.x.into()),
                        ("y", p.y.into()),
                        ("z", p.z.into()),
                    ]),
                    detail: "neither form holds".into(),
                });
            }
        }
        if failures.is_empty() {
            failures.push(Failure {
                instance: Map::new(),
                detail: "no single form holds at every tuple".into(),
            });
        }
    } else if published == defined.len() && proof_form == defined.len() {
        notes.push("both forms hold on this range".into());
    } else if proof_form == defined.len() {
        notes.push("holding form: proof form".into());
    } else {
        notes.push("holding form: published form".into());
    }
    Ok((defined.len(), failures, notes))
}

/// Integer range swept for each of `α, x, y, z`.
pub const LEMMA32_RANGE: std::ops::RangeInclusive<i64> = -3..=5;

pub fn run(id: Identity, bounds: Bounds, jobs: usize) -> Result<VerifyReport> {
    let b = bounds.resolve(id)?;
    let start = Instant::now();
    let (checked, failures, notes) = if id == Identity::Lemma32 {
        run_lemma32(b, jobs)?
    } else {
        let list = instances(id, b);
        let results: Vec<Outcome> =
            pool(jobs)?.install(|| list.par_iter().map(|i| (i.check)()).collect());
        let checked = list.len();
        let mut failures = Vec::new();
        for (i, r) in list.into_iter().zip(results) {
            let detail = match r {
                Ok(None) => continue,
                Ok(Some(d)) => d,
                Err(e) => format!("error: {e}"),
            };
            failures.push(Failure {
                instance: key_map(i.key),
                detail,
            });
        }
        (checked, failures, Vec::new())
    };
    Ok(VerifyReport {
        identity: id.name().to_string(),
        bounds: b,
        instances_checked: checked,
        failures,
        notes,
        elapsed_seconds: start.elapsed().as_secs_f64(),
    })
}
