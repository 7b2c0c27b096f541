use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// A set partition of `[n]` with blocks sorted internally and ordered by
/// their minima.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// From a restricted growth string: element `i+1` lies in block `rgs[i]`.
    pub fn from_rgs(rgs: &[usize]) -> Self {
        let k = rgs.iter().map(|&v| v + 1).max().unwrap_or(0);
        let mut blocks = vec![Vec::new(); k];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        SetPartition {
            n: rgs.len(),
            blocks,
        }
    }

    /// Normalizes block order; rejects anything that does not partition `[n]`.
    pub fn from_blocks(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        if blocks.iter().any(Vec::is_empty) {
            return Err(Error::usage("empty block"));
        }
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| b[0]);
        let mut all: Vec<usize> = blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        let n = all.len();
        if all.iter().enumerate().any(|(i, &e)| e != i + 1) {
            return Err(Error::usage("blocks do not partition [n]"));
        }
        Ok(SetPartition { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn minima(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b[0]).collect()
    }

    pub fn rgs(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (j, b) in self.blocks.iter().enumerate() {
            for &e in b {
                out[e - 1] = j;
            }
        }
        out
    }

    /// `(m2-m1-1, ..., mk-m(k-1)-1, n-mk)` for block minima `m1 < ... < mk`.
    pub fn diff_vector(&self) -> Vec<usize> {
        diff_from_minima(&self.minima(), self.n)
    }
}

fn diff_from_minima(minima: &[usize], n: usize) -> Vec<usize> {
    let mut d: Vec<usize> = minima.windows(2).map(|w| w[1] - w[0] - 1).collect();
    if let Some(&last) = minima.last() {
        d.push(n - last);
    }
    d
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n <= 9 { "" } else { "," };
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(usize::to_string).collect::<Vec<_>>().join(sep))
            .collect();
        f.write_str(&parts.join("/"))
    }
}

/// Parses `"134/25"` (single digits) or `"1,10/2,3,..."`.
impl FromStr for SetPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = |t: &str| Error::usage(format!("bad partition element '{t}'"));
        let blocks = s
            .split('/')
            .map(|b| {
                if b.contains(',') {
                    b.split(',')
                        .map(|t| t.trim().parse::<usize>().map_err(|_| bad(t)))
                        .collect::<Result<Vec<_>>>()
                } else {
                    b.trim()
                        .chars()
                        .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| bad(b)))
                        .collect::<Result<Vec<_>>>()
                }
            })
            .collect::<Result<Vec<_>>>()?;
        SetPartition::from_blocks(blocks)
    }
}

/// Restricted growth strings of length `n` using exactly `k` values, in
/// lexicographic order.
#[derive(Clone, Debug)]
pub struct RestrictedGrowth {
    n: usize,
    k: usize,
    a: Vec<usize>,
    started: bool,
    done: bool,
}

impl RestrictedGrowth {
    pub fn new(n: usize, k: usize) -> Self {
        let done = k > n || (k == 0 && n > 0);
        let mut a = vec![0; n];
        if !done && k > 0 {
            // 0...0 1 2 ... k-1
            for (j, v) in (1..k).enumerate() {
                a[n - (k - 1) + j] = v;
            }
        }
        RestrictedGrowth {
            n,
            k,
            a,
            started: false,
            done,
        }
    }

    pub fn current(&self) -> &[usize] {
        &self.a
    }

    /// Moves to the next string; `false` once exhausted. The first call
    /// positions on the first string.
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            return true;
        }
        let (n, k) = (self.n, self.k);
        let mut prefix_max = vec![0usize; n];
        for i in 1..n {
            prefix_max[i] = prefix_max[i - 1].max(self.a[i - 1]);
        }
        for i in (1..n).rev() {
            let pm = prefix_max[i];
            let cap = (k - 1).min(pm + 1);
            for v in self.a[i] + 1..=cap {
                let used = pm.max(v) + 1;
                let room = n - 1 - i;
                if k - used <= room {
                    self.a[i] = v;
                    let zeros = room - (k - used);
                    for j in 0..room {
                        self.a[i + 1 + j] = if j < zeros { 0 } else { used + (j - zeros) };
                    }
                    return true;
                }
            }
        }
        self.done = true;
        false
    }
}

impl Iterator for RestrictedGrowth {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        self.advance().then(|| self.a.clone())
    }
}

/// Every partition of `[n]` into `k` blocks, in restricted-growth order.
pub fn gen_set_partitions(n: usize, k: usize) -> impl Iterator<Item = SetPartition> {
    RestrictedGrowth::new(n, k).map(|r| SetPartition::from_rgs(&r))
}

/// Counts partitions of `[n]` into `k` blocks whose difference vector
/// satisfies `keep`, without building the partitions.
fn count_where(n: usize, k: usize, keep: impl Fn(&[usize]) -> bool) -> BigInt {
    let mut it = RestrictedGrowth::new(n, k);
    let mut minima = Vec::with_capacity(k);
    let mut count: u64 = 0;
    while it.advance() {
        minima.clear();
        let mut next_block = 0;
        for (i, &v) in it.current().iter().enumerate() {
            if v == next_block {
                minima.push(i + 1);
                next_block += 1;
            }
        }
        if keep(&diff_from_minima(&minima, n)) {
            count += 1;
        }
    }
    BigInt::from(count)
}

fn mod_ok(d: &[usize], s: usize) -> bool {
    d.iter().all(|&x| x % (s + 1) <= 1)
}

fn zeromod_ok(d: &[usize], s: usize) -> bool {
    d.iter().all(|&x| x % (s + 1) == 0)
}

fn bounded_ok(d: &[usize], s: usize) -> bool {
    d.iter().all(|&x| x <= s)
}

/// Partitions of `[n]` into `k` blocks with every `d_i` congruent to 0 or
/// 1 mod `s+1`.
pub fn count_partitions_mod(n: usize, k: usize, s: usize) -> BigInt {
    count_where(n, k, |d| mod_ok(d, s))
}

/// Same with every `d_i` divisible by `s+1`.
pub fn count_partitions_zeromod(n: usize, k: usize, s: usize) -> BigInt {
    count_where(n, k, |d| zeromod_ok(d, s))
}

/// Partitions of `[n_board]` into `n_blocks` blocks with every `d_i <= s_bound`.
pub fn count_partitions_bounded(n_board: usize, n_blocks: usize, s_bound: usize) -> BigInt {
    count_where(n_board, n_blocks, |d| bounded_ok(d, s_bound))
}

pub fn gen_partitions_mod(n: usize, k: usize, s: usize) -> impl Iterator<Item = SetPartition> {
    gen_set_partitions(n, k).filter(move |p| mod_ok(&p.diff_vector(), s))
}

pub fn gen_partitions_bounded(
    n_board: usize,
    n_blocks: usize,
    s_bound: usize,
) -> impl Iterator<Item = SetPartition> {
    gen_set_partitions(n_board, n_blocks).filter(move |p| bounded_ok(&p.diff_vector(), s_bound))
}

/// All partitions of `[n + sum a]` into `n = a.len()` blocks whose
/// difference vector is exactly `a`, built by placing block minima and then
/// letting every other element choose among the blocks opened before it.
pub fn partitions_from_composition(a: &[usize]) -> FromComposition {
    FromComposition::new(a)
}

pub struct FromComposition {
    base: Vec<usize>,
    free: Vec<(usize, usize)>,
    digits: Vec<usize>,
    started: bool,
    done: bool,
}

impl FromComposition {
    fn new(a: &[usize]) -> Self {
        let total = a.len() + a.iter().sum::<usize>();
        let mut base = vec![0; total];
        let mut free = Vec::new();
        let mut pos = 0;
        for (i, &ai) in a.iter().enumerate() {
            base[pos] = i;
            pos += 1;
            for _ in 0..ai {
                free.push((pos, i + 1));
                pos += 1;
            }
        }
        let digits = vec![0; free.len()];
        FromComposition {
            base,
            free,
            digits,
            started: false,
            done: false,
        }
    }
}

impl Iterator for FromComposition {
    type Item = SetPartition;
    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        if self.started {
            let mut j = self.digits.len();
            loop {
                if j == 0 {
                    self.done = true;
                    return None;
                }
                j -= 1;
                self.digits[j] += 1;
                if self.digits[j] < self.free[j].1 {
                    break;
                }
                self.digits[j] = 0;
            }
        }
        self.started = true;
        let mut rgs = self.base.clone();
        for (&(pos, _), &d) in self.free.iter().zip(&self.digits) {
            rgs[pos] = d;
        }
        Some(SetPartition::from_rgs(&rgs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stirling::stirling2;
    use std::collections::BTreeSet;

    fn set_of(strs: &[&str]) -> BTreeSet<SetPartition> {
        strs.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn counts_match_stirling2() {
        for n in 0..=9 {
            for k in 0..=n + 1 {
                let c = gen_set_partitions(n, k).count();
                assert_eq!(BigInt::from(c), stirling2(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn order_is_rgs_lex_and_unique() {
        for n in 1..=7 {
            for k in 1..=n {
                let v: Vec<Vec<usize>> = RestrictedGrowth::new(n, k).collect();
                assert!(v.windows(2).all(|w| w[0] < w[1]));
                for r in &v {
                    assert_eq!(SetPartition::from_rgs(r).rgs(), *r);
                }
            }
        }
    }

    #[test]
    fn four_into_two() {
        let strs: Vec<String> = gen_set_partitions(4, 2).map(|p| p.to_string()).collect();
        assert_eq!(
            strs,
            ["123/4", "124/3", "12/34", "134/2", "13/24", "14/23", "1/234"]
        );
        assert_eq!(gen_set_partitions(5, 2).count(), 15);
        let singles: Vec<_> = gen_set_partitions(4, 4).collect();
        assert_eq!(singles.len(), 1);
        assert_eq!(singles[0].to_string(), "1/2/3/4");
    }

    #[test]
    fn degenerate_sizes() {
        assert_eq!(gen_set_partitions(0, 0).count(), 1);
        assert_eq!(gen_set_partitions(3, 0).count(), 0);
        assert_eq!(gen_set_partitions(2, 3).count(), 0);
    }

    #[test]
    fn difference_vectors() {
        let p: SetPartition = "1/2345".parse().unwrap();
        assert_eq!(p.diff_vector(), vec![0, 3]);
        let p: SetPartition = "1234/5".parse().unwrap();
        assert_eq!(p.diff_vector(), vec![3, 0]);
        let p: SetPartition = "1/2/3".parse().unwrap();
        assert_eq!(p.diff_vector(), vec![0, 0, 0]);
        for p in gen_set_partitions(8, 3) {
            assert_eq!(p.diff_vector().iter().sum::<usize>(), 5);
        }
    }

    #[test]
    fn modular_partitions_five_two() {
        let got: BTreeSet<SetPartition> = gen_partitions_mod(5, 2, 2).collect();
        let want = set_of(&[
            "1234/5", "1345/2", "134/25", "135/24", "13/245", "145/23", "14/235", "15/234",
            "1/2345",
        ]);
        assert_eq!(got, want);
        assert_eq!(count_partitions_mod(5, 2, 2), BigInt::from(9));
        for n in 1..7 {
            assert_eq!(count_partitions_mod(n, n, 3), BigInt::from(1));
            assert_eq!(count_partitions_zeromod(n, n, 3), BigInt::from(1));
            assert_eq!(count_partitions_bounded(n, n, 2), BigInt::from(1));
        }
    }

    #[test]
    fn zero_residue_counts() {
        // d in {(0,3), (3,0)}: 2^3 + 1^3
        assert_eq!(count_partitions_zeromod(5, 2, 2), BigInt::from(9));
        assert_eq!(count_partitions_zeromod(6, 2, 2), BigInt::from(0));
    }

    #[test]
    fn bounded_partitions_five_three() {
        let got: BTreeSet<SetPartition> = gen_partitions_bounded(5, 3, 1).collect();
        let want = set_of(&[
            "1/23/45", "1/235/4", "12/3/45", "13/2/45", "12/34/5", "12/35/4", "135/2/4", "15/23/4",
            "124/3/5", "125/3/4", "13/25/4",
        ]);
        assert_eq!(got, want);
        assert_eq!(count_partitions_bounded(5, 3, 1), BigInt::from(11));
    }

    #[test]
    fn algorithm_from_composition() {
        let v: Vec<_> = partitions_from_composition(&[2, 1, 2]).collect();
        assert_eq!(v.len(), 18);
        for p in &v {
            assert_eq!(p.n(), 8);
            assert_eq!(p.num_blocks(), 3);
            assert_eq!(p.diff_vector(), vec![2, 1, 2]);
        }
        let zeros: Vec<_> = partitions_from_composition(&[0, 0, 0]).collect();
        assert_eq!(zeros.len(), 1);
        assert_eq!(zeros[0].to_string(), "1/2/3");
    }

    #[test]
    fn compositions_cover_all_partitions() {
        let (n, k) = (3, 3);
        let mut union = BTreeSet::new();
        for a0 in 0..=k {
            for a1 in 0..=k - a0 {
                let a = [a0, a1, k - a0 - a1];
                for p in partitions_from_composition(&a) {
                    assert!(union.insert(p));
                }
            }
        }
        let all: BTreeSet<_> = gen_set_partitions(n + k, n).collect();
        assert_eq!(union, all);
    }

    #[test]
    fn text_form_and_parse() {
        let p = SetPartition::from_rgs(&[0, 1, 0, 2, 1, 0, 0, 0, 0, 1]);
        assert_eq!(p.to_string(), "1,3,6,7,8,9/2,5,10/4");
        assert_eq!(p.to_string().parse::<SetPartition>().unwrap(), p);
        assert!("12/23".parse::<SetPartition>().is_err());
        assert!("13".parse::<SetPartition>().is_err());
    }
}
