//! Semistandard tableaux, charge, Kostka-Foulkes polynomials and principal
//! specializations of Schur functions.

use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::qarith::QLaurent;

/// Rows weakly increase left to right, columns strictly increase downward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = Self { rows };
        if !t.is_semistandard() {
            return Err(Error::Precondition(format!(
                "not semistandard: {:?}",
                t.rows
            )));
        }
        Ok(t)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(self.rows.iter().map(Vec::len).collect())
    }

    fn is_semistandard(&self) -> bool {
        let shape_ok = self.rows.iter().all(|r| !r.is_empty())
            && self.rows.windows(2).all(|w| w[0].len() >= w[1].len());
        let rows_ok = self
            .rows
            .iter()
            .all(|r| r.windows(2).all(|w| w[0] <= w[1]) && r.iter().all(|&x| x >= 1));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| below > above));
        shape_ok && rows_ok && cols_ok
    }

    /// Rows read left to right, bottom row first.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }
}

/// All SSYT of `shape` whose entry `i` occurs `content[i-1]` times.
///
/// `content` may be any weak composition; filling value by value adds a
/// horizontal strip each time.
pub fn enumerate_ssyt_weak(shape: &Partition, content: &[usize]) -> Vec<Tableau> {
    let mut out = Vec::new();
    if shape.size() != content.iter().sum::<usize>() {
        return out;
    }
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    fill_value(shape, content, 0, &mut rows, &mut out);
    out
}

fn fill_value(
    shape: &Partition,
    content: &[usize],
    v: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
) {
    if v == content.len() {
        out.push(Tableau { rows: rows.clone() });
        return;
    }
    let before: Vec<usize> = rows.iter().map(Vec::len).collect();
    place_strip(shape, content, v, &before, 0, content[v], rows, out);
}

#[allow(clippy::too_many_arguments)]
fn place_strip(
    shape: &Partition,
    content: &[usize],
    v: usize,
    before: &[usize],
    row: usize,
    left: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
) {
    if left == 0 {
        fill_value(shape, content, v + 1, rows, out);
        return;
    }
    if row == before.len() {
        return;
    }
    // A horizontal strip never extends row r past the old length of row r-1.
    let cap = if row == 0 {
        shape.part(0)
    } else {
        shape.part(row).min(before[row - 1])
    };
    let room = cap.saturating_sub(before[row]);
    for add in (0..=room.min(left)).rev() {
        rows[row].extend(std::iter::repeat_n(v + 1, add));
        place_strip(shape, content, v, before, row + 1, left - add, rows, out);
        rows[row].truncate(before[row]);
    }
}

/// All SSYT of the given shape and content.
pub fn enumerate_ssyt(shape: &Partition, content: &Partition) -> Result<Vec<Tableau>> {
    if shape.size() != content.size() {
        return Err(Error::SizeMismatch {
            left: shape.size(),
            right: content.size(),
        });
    }
    Ok(enumerate_ssyt_weak(shape, content.parts()))
}

pub fn kostka_number(lam: &Partition, mu: &Partition) -> Result<usize> {
    Ok(enumerate_ssyt(lam, mu)?.len())
}

/// Lascoux–Schützenberger charge of a word with partition content.
pub fn charge(word: &[usize]) -> Result<u64> {
    let max = word.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0usize; max];
    for &x in word {
        if x == 0 {
            return Err(Error::NonPartitionContent(counts));
        }
        counts[x - 1] += 1;
    }
    if counts.contains(&0) || counts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NonPartitionContent(counts));
    }

    let n = word.len();
    let mut used = vec![false; n];
    let mut total = 0u64;
    let mut remaining = n;
    while remaining > 0 {
        // Rightmost unused 1 starts the standard subword.
        let mut pos = (0..n).rev().find(|&i| !used[i] && word[i] == 1).unwrap();
        used[pos] = true;
        remaining -= 1;
        let mut index = 0u64;
        let mut letter = 1;
        loop {
            let next = letter + 1;
            // Scan leftward cyclically from the current position.
            let found = (1..n)
                .map(|s| (pos + n - s) % n)
                .find(|&i| !used[i] && word[i] == next);
            let Some(p) = found else { break };
            if p > pos {
                index += 1;
            }
            total += index;
            used[p] = true;
            remaining -= 1;
            pos = p;
            letter = next;
        }
    }
    Ok(total)
}

type KfKey = (Partition, Partition);

fn kf_memo() -> &'static RwLock<HashMap<KfKey, QLaurent>> {
    static MEMO: OnceLock<RwLock<HashMap<KfKey, QLaurent>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Charge generating function over SSYT of shape `lam` and content `mu`.
pub fn kostka_foulkes(lam: &Partition, mu: &Partition) -> Result<QLaurent> {
    if lam.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lam.size(),
            right: mu.size(),
        });
    }
    let key = (lam.clone(), mu.clone());
    if let Some(v) = kf_memo().read().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let value = kostka_foulkes_uncached(lam, mu)?;
    kf_memo().write().unwrap().insert(key, value.clone());
    Ok(value)
}

/// Recomputes from scratch, bypassing the memo.
pub fn kostka_foulkes_uncached(lam: &Partition, mu: &Partition) -> Result<QLaurent> {
    let mut out = QLaurent::zero();
    for t in enumerate_ssyt(lam, mu)? {
        out += QLaurent::q_pow(charge(&t.reading_word())? as i64);
    }
    Ok(out)
}

/// Memoized Kostka-Foulkes values, sorted by key.
pub fn kf_memo_entries() -> Vec<(Partition, Partition, QLaurent)> {
    let memo = kf_memo().read().unwrap();
    let mut v: Vec<_> = memo
        .iter()
        .map(|((l, m), k)| (l.clone(), m.clone(), k.clone()))
        .collect();
    v.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
    v
}

/// Seeds the memo. The caller is responsible for the values being correct.
pub fn kf_memo_insert(lam: Partition, mu: Partition, value: QLaurent) {
    kf_memo().write().unwrap().insert((lam, mu), value);
}

pub fn kf_memo_clear() {
    kf_memo().write().unwrap().clear();
}

/// Counts of SSYT of shape `shape` with entries at most `n_vars`, keyed by
/// content (a weak composition of length `n_vars`).
pub fn ssyt_contents(shape: &Partition, n_vars: usize) -> BTreeMap<Vec<usize>, u64> {
    let mut out = BTreeMap::new();
    let mut content = Vec::with_capacity(n_vars);
    let lengths = vec![0usize; shape.len()];
    content_walk(shape, n_vars, &lengths, &mut content, &mut out);
    out
}

fn content_walk(
    shape: &Partition,
    n_vars: usize,
    lengths: &[usize],
    content: &mut Vec<usize>,
    out: &mut BTreeMap<Vec<usize>, u64>,
) {
    if content.len() == n_vars {
        if lengths.iter().enumerate().all(|(i, &l)| l == shape.part(i)) {
            *out.entry(content.clone()).or_insert(0) += 1;
        }
        return;
    }
    let mut next = lengths.to_vec();
    horizontal_strips(shape, lengths, 0, &mut next, &mut |new: &[usize]| {
        let added: usize = new.iter().zip(lengths).map(|(a, b)| a - b).sum();
        content.push(added);
        content_walk(shape, n_vars, new, content, out);
        content.pop();
    });
}

/// Visits every way of growing `lengths` by a horizontal strip inside `shape`.
fn horizontal_strips(
    shape: &Partition,
    lengths: &[usize],
    row: usize,
    next: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if row == lengths.len() {
        visit(next);
        return;
    }
    let cap = if row == 0 {
        shape.part(0)
    } else {
        shape.part(row).min(lengths[row - 1])
    };
    for len in lengths[row]..=cap.max(lengths[row]) {
        next[row] = len;
        horizontal_strips(shape, lengths, row + 1, next, visit);
    }
    next[row] = lengths[row];
}

/// `s_ν(q^start, q^{start+1}, ..., q^{start+count-1})`.
pub fn principal_spec_schur(nu: &Partition, count: usize, start: i64) -> QLaurent {
    if nu.is_empty() {
        return QLaurent::one();
    }
    if count < nu.len() {
        return QLaurent::zero();
    }
    // Sum over tableaux, aggregated by the row-length profile after each value.
    let mut states: BTreeMap<Vec<usize>, QLaurent> = BTreeMap::new();
    states.insert(vec![0; nu.len()], QLaurent::one());
    for v in 0..count {
        let exp = start + v as i64;
        let mut next_states: BTreeMap<Vec<usize>, QLaurent> = BTreeMap::new();
        for (lengths, weight) in &states {
            let mut next = lengths.clone();
            horizontal_strips(nu, lengths, 0, &mut next, &mut |new: &[usize]| {
                let added: usize = new.iter().zip(lengths).map(|(a, b)| a - b).sum();
                let w = weight.shift(exp * added as i64);
                *next_states.entry(new.to_vec()).or_default() += w;
            });
        }
        states = next_states;
    }
    states.remove(nu.parts()).unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_partitions;
    use crate::qarith::{q_int, Rational};
    use num_bigint::BigInt;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Brute force: every filling of the shape with the right multiset of entries.
    fn brute_ssyt_count(shape: &Partition, content: &[usize]) -> usize {
        let mut letters = Vec::new();
        for (i, &c) in content.iter().enumerate() {
            letters.extend(std::iter::repeat_n(i + 1, c));
        }
        let cells = shape.size();
        let mut count = 0;
        let mut perm = letters.clone();
        perm.sort();
        let mut seen = std::collections::HashSet::new();
        permute(&mut perm, 0, &mut |w| {
            if !seen.insert(w.to_vec()) {
                return;
            }
            let mut rows = Vec::new();
            let mut k = 0;
            for &len in shape.parts() {
                rows.push(w[k..k + len].to_vec());
                k += len;
            }
            if (Tableau { rows }).is_semistandard() {
                count += 1;
            }
        });
        assert_eq!(cells, letters.len());
        count
    }

    fn permute(v: &mut Vec<usize>, i: usize, f: &mut dyn FnMut(&[usize])) {
        if i == v.len() {
            f(v);
            return;
        }
        for j in i..v.len() {
            v.swap(i, j);
            permute(v, i + 1, f);
            v.swap(i, j);
        }
    }

    #[test]
    fn ssyt_examples() {
        assert_eq!(
            enumerate_ssyt(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap().len(),
            2
        );
        let single = enumerate_ssyt(&p(&[4]), &p(&[4])).unwrap();
        assert_eq!(
            single,
            vec![Tableau {
                rows: vec![vec![1; 4]]
            }]
        );
        assert!(enumerate_ssyt(&p(&[1, 1]), &p(&[2])).unwrap().is_empty());
        assert!(matches!(
            enumerate_ssyt(&p(&[2]), &p(&[1])),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn ssyt_matches_brute_force() {
        for n in 1..=5 {
            for lam in enumerate_partitions(n, None) {
                for mu in enumerate_partitions(n, None) {
                    let ts = enumerate_ssyt(&lam, &mu).unwrap();
                    assert!(ts.iter().all(|t| t.is_semistandard() && t.shape() == lam));
                    assert_eq!(ts.len(), brute_ssyt_count(&lam, mu.parts()), "{lam} {mu}");
                }
            }
        }
    }

    #[test]
    fn charge_examples() {
        assert_eq!(charge(&[4, 3, 2, 1]).unwrap(), 0);
        assert_eq!(charge(&[1, 2, 3, 4, 5]).unwrap(), 10);
        assert_eq!(charge(&[3, 1, 2]).unwrap(), 2);
        assert_eq!(charge(&[2, 1, 3]).unwrap(), 1);
        assert_eq!(charge(&[1, 2]).unwrap(), 1);
        assert!(charge(&[1, 2, 2]).is_err());
        assert!(charge(&[2, 3]).is_err());
    }

    #[test]
    fn kostka_foulkes_examples() {
        assert_eq!(
            kostka_foulkes(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(),
            QLaurent::from_coeffs(&[0, 1, 1])
        );
        assert!(kostka_foulkes(&p(&[3, 1]), &p(&[3, 1])).unwrap().is_one());
        assert_eq!(
            kostka_foulkes(&p(&[2]), &p(&[1, 1])).unwrap(),
            QLaurent::q_pow(1)
        );
        // Two classical values: K_{(3,1),(2,1,1)} = q + q^2, K_{(2,2),(2,1,1)} = q.
        assert_eq!(
            kostka_foulkes(&p(&[3, 1]), &p(&[2, 1, 1])).unwrap(),
            QLaurent::from_coeffs(&[0, 1, 1])
        );
        assert_eq!(
            kostka_foulkes(&p(&[2, 2]), &p(&[2, 1, 1])).unwrap(),
            QLaurent::q_pow(1)
        );
        // K_{(n),(1^n)} = q^{C(n,2)}.
        assert_eq!(
            kostka_foulkes(&p(&[4]), &p(&[1, 1, 1, 1])).unwrap(),
            QLaurent::q_pow(6)
        );
        assert!(kostka_foulkes(&p(&[2]), &p(&[1])).is_err());
        assert_eq!(kostka_number(&p(&[1, 1]), &p(&[2])).unwrap(), 0);
        assert_eq!(kostka_number(&p(&[3]), &p(&[3])).unwrap(), 1);
    }

    #[test]
    fn kostka_foulkes_specializes_and_vanishes() {
        for n in 0..=6 {
            for lam in enumerate_partitions(n, None) {
                for mu in enumerate_partitions(n, None) {
                    let kf = kostka_foulkes(&lam, &mu).unwrap();
                    let k = kostka_number(&lam, &mu).unwrap();
                    assert_eq!(kf.eval_at_one(), Rational::from_integer(BigInt::from(k)));
                    assert!(kf.is_nonneg_integral_polynomial());
                    if !lam.dominates(&mu) {
                        assert!(kf.is_zero(), "{lam} {mu}");
                    }
                    // Degree is n(μ) - n(λ) with n(λ) = b(λ) when λ ⊵ μ.
                    if lam.dominates(&mu) {
                        assert_eq!(kf.max_exp(), Some(mu.b() - lam.b()), "{lam} {mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn principal_spec_examples() {
        assert_eq!(principal_spec_schur(&p(&[1, 1]), 2, 1), QLaurent::q_pow(3));
        for j in 0..6 {
            assert_eq!(principal_spec_schur(&p(&[1]), j, 0), q_int(j));
        }
        assert!(principal_spec_schur(&p(&[2]), 0, 1).is_zero());
        assert!(principal_spec_schur(&p(&[]), 0, 1).is_one());
        assert!(principal_spec_schur(&p(&[1, 1, 1]), 2, 0).is_zero());
    }

    /// Hook-content formula: `s_ν(1, ..., q^{c-1}) = q^{b(ν)} Π [c + content] / [hook]`.
    fn hook_content(nu: &Partition, count: usize) -> QLaurent {
        let conj = nu.conjugate();
        let mut num = QLaurent::q_pow(nu.b());
        let mut den = QLaurent::one();
        for (i, &row) in nu.parts().iter().enumerate() {
            for j in 0..row {
                let content = j as i64 - i as i64;
                let hook = (row - j - 1) + (conj.part(j) - i - 1) + 1;
                let top = count as i64 + content;
                if top <= 0 {
                    return QLaurent::zero();
                }
                num = &num * &q_int(top as usize);
                den = &den * &q_int(hook);
            }
        }
        num.div_exact(&den).unwrap()
    }

    #[test]
    fn principal_spec_matches_hook_content_and_shifts() {
        for n in 0..=5 {
            for nu in enumerate_partitions(n, None) {
                for c in 0..=5 {
                    let at0 = principal_spec_schur(&nu, c, 0);
                    assert_eq!(at0, hook_content(&nu, c), "{nu} count={c}");
                    assert_eq!(principal_spec_schur(&nu, c, 1), at0.shift(n as i64));
                }
            }
        }
    }

    #[test]
    fn contents_table() {
        let t = ssyt_contents(&p(&[2]), 2);
        assert_eq!(t.len(), 3);
        assert!(t.values().all(|&c| c == 1));
        let t = ssyt_contents(&p(&[1, 1]), 2);
        assert_eq!(t.into_iter().collect::<Vec<_>>(), vec![(vec![1, 1], 1)]);
        let t = ssyt_contents(&p(&[2, 1]), 3);
        assert_eq!(t.get(&vec![1, 1, 1]), Some(&2));
        assert_eq!(t.values().sum::<u64>(), 8);
    }
}
