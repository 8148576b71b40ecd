//! Ordered set partitions, the `inv` statistic and reading words, and the two
//! constructions of `C_{n,k}`: through fundamental quasisymmetric functions
//! and through the dual Hall-Littlewood expansion.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::enumerate_partitions;
use crate::qarith::{binomial, q_multinomial, QLaurent};
use crate::symfun::{e_product, hall_inner, omega, qprime, rev_q_sym, MonomialTable, SymFunc};

/// `(B_1 | ... | B_k)`, blocks nonempty, disjoint, covering `{1..n}`.
/// Elements are kept ascending inside each block.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedSetPartition {
    blocks: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::MalformedSetPartition("empty block".into()));
            }
            b.sort_unstable();
        }
        let mut all: Vec<usize> = blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        if all.iter().enumerate().any(|(i, &x)| x != i + 1) {
            return Err(Error::MalformedSetPartition(format!(
                "blocks {blocks:?} do not partition 1..{}",
                all.len()
            )));
        }
        Ok(Self { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Pairs `i < j` with `i` minimal in its block and that block strictly
    /// right of the block of `j`.
    pub fn inv(&self) -> usize {
        let n = self.size();
        let mut block_of = vec![0; n + 1];
        for (b, block) in self.blocks.iter().enumerate() {
            for &x in block {
                block_of[x] = b;
            }
        }
        self.blocks
            .iter()
            .enumerate()
            .map(|(b, block)| {
                let i = block[0];
                (i + 1..=n).filter(|&j| block_of[j] < b).count()
            })
            .sum()
    }

    /// Blocks stacked as bottom-justified columns (smallest element at the
    /// bottom), read row by row from the top, each row left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        let height = self.blocks.iter().map(Vec::len).max().unwrap_or(0);
        let mut word = Vec::with_capacity(self.size());
        for row in (0..height).rev() {
            for block in &self.blocks {
                if let Some(&x) = block.get(row) {
                    word.push(x);
                }
            }
        }
        word
    }
}

impl fmt::Debug for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for x in b {
                write!(f, "{x}")?;
            }
        }
        write!(f, ")")
    }
}

/// Every element of `OP_{n,k}`, ordered lexicographically by the word
/// `(block of 1, block of 2, ..., block of n)`.
pub fn enumerate_osp(n: usize, k: usize) -> Result<Vec<OrderedSetPartition>> {
    if k < 1 || k > n {
        return Err(Error::Range(format!("need 1 <= k <= n, got n={n} k={k}")));
    }
    let mut out = Vec::new();
    let mut assign = Vec::with_capacity(n);
    let mut used = vec![0usize; k];
    assign_blocks(n, k, &mut assign, &mut used, 0, &mut out);
    Ok(out)
}

fn assign_blocks(
    n: usize,
    k: usize,
    assign: &mut Vec<usize>,
    used: &mut [usize],
    covered: usize,
    out: &mut Vec<OrderedSetPartition>,
) {
    let placed = assign.len();
    // Every block must still be reachable with the remaining letters.
    if k - covered > n - placed {
        return;
    }
    if placed == n {
        let mut blocks = vec![Vec::new(); k];
        for (x, &b) in assign.iter().enumerate() {
            blocks[b].push(x + 1);
        }
        out.push(OrderedSetPartition { blocks });
        return;
    }
    for b in 0..k {
        let fresh = used[b] == 0;
        used[b] += 1;
        assign.push(b);
        assign_blocks(n, k, assign, used, covered + usize::from(fresh), out);
        assign.pop();
        used[b] -= 1;
    }
}

/// `Des(π^{-1})` for a permutation in one-line notation.
pub fn ides(pi: &[usize]) -> Result<BTreeSet<usize>> {
    let n = pi.len();
    let mut pos = vec![usize::MAX; n + 1];
    for (i, &x) in pi.iter().enumerate() {
        if x == 0 || x > n || pos[x] != usize::MAX {
            return Err(Error::MalformedPermutation(pi.to_vec()));
        }
        pos[x] = i;
    }
    Ok((1..n).filter(|&i| pos[i] > pos[i + 1]).collect())
}

/// Monomial coefficients of `F_{n,S}(x_1, ..., x_N)`.
pub fn fundamental_qsym_expand(
    n: usize,
    set: &BTreeSet<usize>,
    n_vars: usize,
) -> Result<MonomialTable> {
    if let Some(&bad) = set.iter().find(|&&s| s == 0 || s >= n) {
        return Err(Error::Range(format!(
            "descent {bad} outside 1..{}",
            n.saturating_sub(1)
        )));
    }
    let mut out = MonomialTable::new();
    let mut content = vec![0usize; n_vars];
    fundamental_walk(n, set, n_vars, 0, 0, &mut content, &mut out);
    Ok(out)
}

fn fundamental_walk(
    n: usize,
    set: &BTreeSet<usize>,
    n_vars: usize,
    pos: usize,
    min_var: usize,
    content: &mut Vec<usize>,
    out: &mut MonomialTable,
) {
    if pos == n {
        *out.entry(content.clone()).or_default() += QLaurent::one();
        return;
    }
    for v in min_var..n_vars {
        content[v] += 1;
        // Position pos+1 (1-based) in S forces a strict rise to the next index.
        let next_min = if set.contains(&(pos + 1)) { v + 1 } else { v };
        fundamental_walk(n, set, n_vars, pos + 1, next_min, content, out);
        content[v] -= 1;
    }
}

/// `Σ_{σ ∈ OP_{n,k}} q^{inv σ} F_{n, iDes(rword σ)}` in `N` variables.
pub fn c_via_osp(n: usize, k: usize, n_vars: usize) -> Result<MonomialTable> {
    if n > n_vars {
        return Err(Error::Range(format!("need n <= N, got n={n} N={n_vars}")));
    }
    // Group by descent set first; there are at most 2^{n-1} of them.
    let mut by_set: BTreeMap<BTreeSet<usize>, QLaurent> = BTreeMap::new();
    for sigma in enumerate_osp(n, k)? {
        let set = ides(&sigma.reading_word())?;
        *by_set.entry(set).or_default() += QLaurent::q_pow(sigma.inv() as i64);
    }
    let mut out = MonomialTable::new();
    for (set, weight) in by_set {
        for (content, c) in fundamental_qsym_expand(n, &set, n_vars)? {
            *out.entry(content).or_default() += &(&c * &weight);
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// `C_{n,k} = ω Σ_{μ ⊢ n, ℓ(μ) = k} q^{b̄(μ)} [k brack m(μ)]_q Q'_μ`.
pub fn c_via_qprime(n: usize, k: usize) -> Result<SymFunc> {
    if k < 1 || k > n {
        return Err(Error::Range(format!("need 1 <= k <= n, got n={n} k={k}")));
    }
    let mut omega_c = SymFunc::zero(n);
    for mu in enumerate_partitions(n, Some(k)) {
        let coeff = q_multinomial(&mu.multiplicities())?.shift(mu.bbar());
        omega_c += &qprime(&mu).scale(&coeff);
    }
    Ok(omega(&omega_c))
}

/// `C_{n,k}` with the boundary conventions `C_{0,0} = 1` and zero outside
/// `1 <= k <= n` otherwise.
pub fn c_poly(n: usize, k: usize) -> SymFunc {
    match (n, k) {
        (0, 0) => SymFunc::one(),
        _ if k < 1 || k > n => SymFunc::zero(n),
        _ => c_via_qprime(n, k).expect("in range"),
    }
}

/// The q-degree `(k-1)n - C(k,2)` of `C_{n,k}`.
pub fn c_degree(n: usize, k: usize) -> i64 {
    (k as i64 - 1) * n as i64 - binomial(k as i64, 2)
}

/// `D_{n,k} = (rev_q ∘ ω) C_{n,k}` reversed at degree `(k-1)n - C(k,2)`.
/// Zero outside `1 <= k <= n` except `D_{0,0} = 1`.
pub fn d_poly(n: usize, k: usize) -> Result<SymFunc> {
    match (n, k) {
        (0, 0) => Ok(SymFunc::one()),
        _ if k < 1 || k > n => Ok(SymFunc::zero(n)),
        _ => rev_q_sym(&omega(&c_via_qprime(n, k)?), c_degree(n, k)),
    }
}

/// Is `word` a shuffle of the decreasing runs `(α_1..1), (α_1+α_2..α_1+1), ...`?
fn is_alpha_shuffle(word: &[usize], alpha: &[usize]) -> bool {
    let mut run_of = vec![0usize; word.len() + 1];
    let mut start = 1;
    for (r, &a) in alpha.iter().enumerate() {
        for x in start..start + a {
            run_of[x] = r;
        }
        start += a;
    }
    let mut last = vec![usize::MAX; alpha.len()];
    word.iter().all(|&x| {
        let r = run_of[x];
        let ok = x < last[r];
        last[r] = x;
        ok
    })
}

/// `Σ q^{inv σ}` over `σ ∈ OP_{n,k}` whose reading word is an `α`-shuffle;
/// equals `⟨C_{n,k}, e_α⟩`.
pub fn shuffle_inner(n: usize, k: usize, alpha: &[usize]) -> Result<QLaurent> {
    if alpha.iter().sum::<usize>() != n || alpha.contains(&0) {
        return Err(Error::Range(format!(
            "{alpha:?} is not a composition of {n}"
        )));
    }
    Ok(enumerate_osp(n, k)?
        .iter()
        .filter(|s| is_alpha_shuffle(&s.reading_word(), alpha))
        .map(|s| QLaurent::q_pow(s.inv() as i64))
        .sum())
}

/// `⟨C_{n,k}, e_{α_1} ⋯ e_{α_p}⟩` computed in Schur coordinates.
pub fn schur_inner_with_e(n: usize, k: usize, alpha: &[usize]) -> Result<QLaurent> {
    hall_inner(&c_via_qprime(n, k)?, &e_product(alpha))
}

/// All compositions of `n`.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;
    use crate::symfun::expand_in_vars;

    fn osp(blocks: &[&[usize]]) -> OrderedSetPartition {
        OrderedSetPartition::new(blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    fn s(parts: &[usize]) -> SymFunc {
        SymFunc::schur(Partition::new(parts.to_vec()).unwrap())
    }

    fn stirling2(n: usize, k: usize) -> usize {
        match (n, k) {
            (0, 0) => 1,
            (_, 0) | (0, _) => 0,
            _ => k * stirling2(n - 1, k) + stirling2(n - 1, k - 1),
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_osp(2, 1).unwrap(), vec![osp(&[&[1, 2]])]);
        assert_eq!(
            enumerate_osp(2, 2).unwrap(),
            vec![osp(&[&[1], &[2]]), osp(&[&[2], &[1]])]
        );
        assert_eq!(enumerate_osp(3, 2).unwrap().len(), 6);
        for n in 1..=7 {
            for k in 1..=n {
                let fact: usize = (1..=k).product();
                let all = enumerate_osp(n, k).unwrap();
                assert_eq!(all.len(), fact * stirling2(n, k));
                let set: BTreeSet<_> = all.iter().collect();
                assert_eq!(set.len(), all.len());
            }
        }
        assert!(enumerate_osp(2, 3).is_err());
        assert!(enumerate_osp(2, 0).is_err());
    }

    #[test]
    fn malformed_osp() {
        assert!(OrderedSetPartition::new(vec![vec![1], vec![]]).is_err());
        assert!(OrderedSetPartition::new(vec![vec![2, 7], vec![1, 3, 5], vec![4, 5]]).is_err());
    }

    #[test]
    fn inv_examples() {
        assert_eq!(osp(&[&[2, 7], &[1, 3, 5], &[4, 6]]).inv(), 4);
        assert_eq!(osp(&[&[1], &[2]]).inv(), 0);
        assert_eq!(osp(&[&[2], &[1]]).inv(), 1);
    }

    #[test]
    fn reading_word_examples() {
        assert_eq!(
            osp(&[&[2, 7], &[1, 3, 5], &[4, 6]]).reading_word(),
            vec![5, 7, 3, 6, 2, 1, 4]
        );
        assert_eq!(osp(&[&[1, 2, 3, 4]]).reading_word(), vec![4, 3, 2, 1]);
        assert_eq!(osp(&[&[1], &[2]]).reading_word(), vec![1, 2]);
        assert_eq!(osp(&[&[3], &[1], &[2]]).reading_word(), vec![3, 1, 2]);
    }

    #[test]
    fn ides_examples() {
        assert_eq!(ides(&[2, 1]).unwrap(), BTreeSet::from([1]));
        assert!(ides(&[1, 2, 3, 4]).unwrap().is_empty());
        // 231 has inverse 312, whose only descent is at 1.
        assert_eq!(ides(&[2, 3, 1]).unwrap(), BTreeSet::from([1]));
        assert_eq!(ides(&[4, 3, 2, 1]).unwrap(), BTreeSet::from([1, 2, 3]));
        assert!(ides(&[1, 1]).is_err());
        assert!(ides(&[0, 1]).is_err());
        assert!(ides(&[3, 1]).is_err());
    }

    #[test]
    fn fundamental_examples() {
        let h2 = fundamental_qsym_expand(2, &BTreeSet::new(), 2).unwrap();
        assert_eq!(
            h2.keys().cloned().collect::<Vec<_>>(),
            vec![vec![0, 2], vec![1, 1], vec![2, 0]]
        );
        let e2 = fundamental_qsym_expand(2, &BTreeSet::from([1]), 2).unwrap();
        assert_eq!(
            e2.into_iter().collect::<Vec<_>>(),
            vec![(vec![1, 1], QLaurent::one())]
        );
        let x1 = fundamental_qsym_expand(1, &BTreeSet::new(), 1).unwrap();
        assert_eq!(
            x1.into_iter().collect::<Vec<_>>(),
            vec![(vec![1], QLaurent::one())]
        );
        assert!(fundamental_qsym_expand(2, &BTreeSet::from([2]), 2).is_err());
        // F_{n,[n-1]} = e_n and F_{n,∅} = h_n.
        let full: BTreeSet<usize> = (1..4).collect();
        assert_eq!(
            fundamental_qsym_expand(4, &full, 4).unwrap(),
            expand_in_vars(&SymFunc::elementary(4), 4)
        );
        assert_eq!(
            fundamental_qsym_expand(4, &BTreeSet::new(), 4).unwrap(),
            expand_in_vars(&SymFunc::complete(4), 4)
        );
    }

    #[test]
    fn c_small_cases() {
        assert_eq!(c_via_qprime(2, 2).unwrap(), &s(&[2]) + &s(&[1, 1]).shift(1));
        assert_eq!(c_via_qprime(2, 1).unwrap(), s(&[1, 1]));
        assert_eq!(
            c_via_qprime(4, 4).unwrap(),
            omega(&qprime(&Partition::column(4)))
        );
        assert!(c_via_qprime(2, 3).is_err());
        assert_eq!(
            c_via_osp(2, 1, 2).unwrap(),
            expand_in_vars(&SymFunc::elementary(2), 2)
        );
        assert_eq!(
            c_via_osp(2, 2, 2).unwrap(),
            expand_in_vars(
                &(&SymFunc::complete(2) + &SymFunc::elementary(2).shift(1)),
                2
            )
        );
        assert_eq!(
            c_via_osp(1, 1, 1).unwrap().into_iter().collect::<Vec<_>>(),
            vec![(vec![1], QLaurent::one())]
        );
    }

    #[test]
    fn osp_route_matches_qprime_route() {
        for n in 1..=5 {
            for k in 1..=n {
                let via_osp = c_via_osp(n, k, n).unwrap();
                assert_eq!(
                    via_osp,
                    expand_in_vars(&c_via_qprime(n, k).unwrap(), n),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn d_examples() {
        assert_eq!(d_poly(2, 2).unwrap(), &s(&[2]) + &s(&[1, 1]).shift(1));
        assert_eq!(d_poly(2, 1).unwrap(), s(&[2]));
        assert_eq!(d_poly(1, 1).unwrap(), s(&[1]));
        assert_eq!(d_poly(0, 0).unwrap(), SymFunc::one());
        assert!(d_poly(3, 0).unwrap().is_zero());
        assert!(d_poly(3, 4).unwrap().is_zero());
        for n in 1..=6 {
            for k in 1..=n {
                let c = c_via_qprime(n, k).unwrap();
                assert_eq!(c.q_degree(), Some(c_degree(n, k)));
                assert!(d_poly(n, k).unwrap().is_schur_positive());
            }
        }
    }

    #[test]
    fn shuffle_examples() {
        let all: QLaurent = enumerate_osp(3, 3)
            .unwrap()
            .iter()
            .map(|s| QLaurent::q_pow(s.inv() as i64))
            .sum();
        assert_eq!(shuffle_inner(3, 3, &[1, 1, 1]).unwrap(), all);
        assert!(shuffle_inner(2, 1, &[2]).unwrap().is_one());
        assert_eq!(shuffle_inner(2, 2, &[2]).unwrap(), QLaurent::q_pow(1));
        assert!(shuffle_inner(3, 2, &[2]).is_err());
        for n in 1..=4 {
            for k in 1..=n {
                for alpha in compositions(n) {
                    assert_eq!(
                        shuffle_inner(n, k, &alpha).unwrap(),
                        schur_inner_with_e(n, k, &alpha).unwrap(),
                        "n={n} k={k} alpha={alpha:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn composition_counts() {
        for n in 0..=6 {
            assert_eq!(compositions(n).len(), if n == 0 { 1 } else { 1 << (n - 1) });
        }
    }
}
