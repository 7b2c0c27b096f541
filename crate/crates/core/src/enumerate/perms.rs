use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Pow, Zero};

use crate::error::{Error, Result};

/// A permutation of `[n]` in standard cycle form: every cycle starts with
/// its minimum and cycles are ordered by ascending minima.
///
/// Ordering and equality follow the one-line form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclePermutation {
    one_line: Vec<usize>,
    cycles: Vec<Vec<usize>>,
}

impl CyclePermutation {
    /// `one_line[i]` is the image of `i+1`.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &v in one_line {
            if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::usage("not a permutation"));
            }
        }
        let mut visited = vec![false; n];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if visited[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut e = start;
            while !visited[e - 1] {
                visited[e - 1] = true;
                cycle.push(e);
                e = one_line[e - 1];
            }
            cycles.push(cycle);
        }
        Ok(CyclePermutation {
            one_line: one_line.to_vec(),
            cycles,
        })
    }

    /// Accepts cycles in any rotation and order; `(a b c)` maps `a -> b -> c -> a`.
    pub fn from_cycles(cycles: &[Vec<usize>]) -> Result<Self> {
        let n: usize = cycles.iter().map(Vec::len).sum();
        let mut one_line = vec![0; n];
        for c in cycles {
            for (i, &e) in c.iter().enumerate() {
                if e == 0 || e > n || one_line[e - 1] != 0 {
                    return Err(Error::usage("cycles do not partition [n]"));
                }
                one_line[e - 1] = c[(i + 1) % c.len()];
            }
        }
        CyclePermutation::from_one_line(&one_line)
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn num_cycles(&self) -> usize {
        self.cycles.len()
    }

    /// Cycle minima, ascending.
    pub fn min_set(&self) -> Vec<usize> {
        self.cycles.iter().map(|c| c[0]).collect()
    }

    /// Min-set as a bitmask (bit `i-1` for element `i`).
    pub fn min_mask(&self) -> u64 {
        self.cycles.iter().fold(0, |m, c| m | 1 << (c[0] - 1))
    }
}

impl PartialOrd for CyclePermutation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CyclePermutation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.one_line.cmp(&other.one_line)
    }
}

impl fmt::Display for CyclePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return f.write_str("()");
        }
        for c in &self.cycles {
            let items: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", items.join(" "))?;
        }
        Ok(())
    }
}

/// `((1)(2 3), (1 2 3))`.
pub fn format_tuple(t: &[CyclePermutation]) -> String {
    let items: Vec<String> = t.iter().map(ToString::to_string).collect();
    format!("({})", items.join(", "))
}

/// All permutations of `[n]` in lexicographic one-line order.
pub struct Permutations {
    cur: Vec<usize>,
    started: bool,
    done: bool,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Permutations {
            cur: (1..=n).collect(),
            started: false,
            done: false,
        }
    }
}

impl Iterator for Permutations {
    type Item = CyclePermutation;
    fn next(&mut self) -> Option<CyclePermutation> {
        if self.done {
            return None;
        }
        if self.started {
            let a = &mut self.cur;
            let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
                self.done = true;
                return None;
            };
            let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
            a.swap(i - 1, j);
            a[i..].reverse();
        }
        self.started = true;
        Some(CyclePermutation::from_one_line(&self.cur).expect("valid permutation"))
    }
}

pub fn gen_permutations(n: usize) -> Permutations {
    Permutations::new(n)
}

/// Permutations of `[n]` with exactly `k` cycles, in one-line order.
pub fn gen_cycle_perms(n: usize, k: usize) -> impl Iterator<Item = CyclePermutation> {
    Permutations::new(n).filter(move |p| p.num_cycles() == k)
}

fn class_sizes(perms: impl Iterator<Item = CyclePermutation>) -> BTreeMap<u64, u64> {
    let mut classes = BTreeMap::new();
    for p in perms {
        *classes.entry(p.min_mask()).or_insert(0u64) += 1;
    }
    classes
}

/// Ordered `s`-tuples of `k`-cycle permutations of `[n]` sharing one
/// min-set, counted as `sum over min-sets M of |class(M)|^s`.
pub fn count_equal_minset_tuples(n: usize, k: usize, s: usize) -> BigInt {
    class_sizes(gen_cycle_perms(n, k))
        .values()
        .map(|&c| Pow::pow(BigInt::from(c), s as u32))
        .sum()
}

/// The same count by filtering the full `s`-fold product; only for tiny `n`.
pub fn count_equal_minset_tuples_naive(n: usize, k: usize, s: usize) -> BigInt {
    let masks: Vec<u64> = gen_cycle_perms(n, k).map(|p| p.min_mask()).collect();
    let len = masks.len();
    if len == 0 {
        return BigInt::zero();
    }
    let mut idx = vec![0usize; s];
    let mut count: u64 = 0;
    loop {
        if idx.iter().all(|&i| masks[i] == masks[idx[0]]) {
            count += 1;
        }
        let mut j = s;
        loop {
            if j == 0 {
                return BigInt::from(count);
            }
            j -= 1;
            idx[j] += 1;
            if idx[j] < len {
                break;
            }
            idx[j] = 0;
        }
    }
}

/// `s`-tuples of permutations of `[n]` with
/// `min(sigma_i) ⊆ min(sigma_(i-1))` and total min-set size `k + s - 1`.
///
/// Counted by a chain dynamic program over min-set classes.
pub fn count_nested_minset_tuples(n: usize, k: i64, s: usize) -> BigInt {
    assert!(s >= 1, "s must be at least 1");
    let target = k + s as i64 - 1;
    if target < 0 {
        return BigInt::zero();
    }
    let classes: Vec<(u64, u32, BigInt)> = class_sizes(Permutations::new(n))
        .into_iter()
        .map(|(m, c)| (m, m.count_ones(), BigInt::from(c)))
        .collect();
    let mut layer: HashMap<(u64, i64), BigInt> = HashMap::new();
    for (m, size, c) in &classes {
        *layer.entry((*m, i64::from(*size))).or_default() += c;
    }
    for _ in 1..s {
        let mut next: HashMap<(u64, i64), BigInt> = HashMap::new();
        for ((outer, total), ways) in &layer {
            for (m, size, c) in &classes {
                if m & !outer != 0 {
                    continue;
                }
                let t = total + i64::from(*size);
                if t > target {
                    continue;
                }
                *next.entry((*m, t)).or_default() += ways * c;
            }
        }
        layer = next;
    }
    layer
        .into_iter()
        .filter(|((_, t), _)| *t == target)
        .map(|(_, v)| v)
        .sum()
}

/// Lazily lists the tuples counted by [`count_nested_minset_tuples`], in
/// lexicographic order of one-line forms.
pub fn gen_nested_minset_tuples(n: usize, k: i64, s: usize) -> NestedTuples {
    assert!(s >= 1, "s must be at least 1");
    let perms: Vec<CyclePermutation> = Permutations::new(n).collect();
    let masks = perms.iter().map(CyclePermutation::min_mask).collect();
    let sizes = perms.iter().map(|p| p.num_cycles() as i64).collect();
    NestedTuples {
        perms,
        masks,
        sizes,
        s,
        target: k + s as i64 - 1,
        stack: Vec::with_capacity(s),
        next_start: 0,
        done: false,
    }
}

pub struct NestedTuples {
    perms: Vec<CyclePermutation>,
    masks: Vec<u64>,
    sizes: Vec<i64>,
    s: usize,
    target: i64,
    stack: Vec<usize>,
    next_start: usize,
    done: bool,
}

impl NestedTuples {
    fn fits(&self, i: usize) -> bool {
        let depth = self.stack.len();
        if let Some(&prev) = self.stack.last() {
            if self.masks[i] & !self.masks[prev] != 0 {
                return false;
            }
        }
        let used: i64 = self.stack.iter().map(|&j| self.sizes[j]).sum::<i64>() + self.sizes[i];
        let rest = (self.s - depth - 1) as i64;
        // later entries have between 1 and sizes[i] cycles
        used + rest <= self.target && used + rest * self.sizes[i] >= self.target
    }
}

impl Iterator for NestedTuples {
    type Item = Vec<CyclePermutation>;
    fn next(&mut self) -> Option<Vec<CyclePermutation>> {
        while !self.done {
            match (self.next_start..self.perms.len()).find(|&i| self.fits(i)) {
                Some(i) => {
                    self.stack.push(i);
                    self.next_start = 0;
                    if self.stack.len() == self.s {
                        let tuple = self.stack.iter().map(|&j| self.perms[j].clone()).collect();
                        self.stack.pop();
                        self.next_start = i + 1;
                        return Some(tuple);
                    }
                }
                None => match self.stack.pop() {
                    Some(j) => self.next_start = j + 1,
                    None => self.done = true,
                },
            }
        }
        None
    }
}
