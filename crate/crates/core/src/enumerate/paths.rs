use std::fmt;

use itertools::Itertools;

use crate::polycore::{Monomial, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    H,
    V,
}

/// A lattice path from `(0,0)` to `(k, n-1)` with unit east (`H`) and
/// north (`V`) steps. An `H` step at height `i` carries the weight `x_(i+1)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticePath { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Variable index of every `H` step, in path order.
    pub fn weights(&self) -> Vec<usize> {
        let mut level = 0;
        let mut out = Vec::new();
        for s in &self.steps {
            match s {
                Step::H => out.push(level + 1),
                Step::V => level += 1,
            }
        }
        out
    }

    /// Number of `H` steps on each level `0..=n-1`.
    pub fn level_counts(&self) -> Vec<usize> {
        let mut counts = vec![0];
        for s in &self.steps {
            match s {
                Step::H => *counts.last_mut().unwrap() += 1,
                Step::V => counts.push(0),
            }
        }
        counts
    }

    pub fn weight(&self) -> Monomial {
        Monomial::new(self.level_counts().into_iter().map(|c| c as u32).collect())
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::H => "H",
                Step::V => "V",
            })?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cell {
    Black,
    Gray,
}

/// A board of black and gray squares. A black square with `m` gray squares
/// to its left carries the weight `x_(m+1)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tiling {
    cells: Vec<Cell>,
}

impl Tiling {
    pub fn new(cells: Vec<Cell>) -> Self {
        Tiling { cells }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn weights(&self) -> Vec<usize> {
        let mut gray = 0;
        let mut out = Vec::new();
        for c in &self.cells {
            match c {
                Cell::Black => out.push(gray + 1),
                Cell::Gray => gray += 1,
            }
        }
        out
    }

    /// Lengths of the maximal black runs, including empty runs between
    /// adjacent gray squares and at both ends.
    pub fn black_runs(&self) -> Vec<usize> {
        let mut runs = vec![0];
        for c in &self.cells {
            match c {
                Cell::Black => *runs.last_mut().unwrap() += 1,
                Cell::Gray => runs.push(0),
            }
        }
        runs
    }

    pub fn weight(&self) -> Monomial {
        let weights = self.weights();
        let mut exps = vec![0u32; weights.iter().copied().max().unwrap_or(0)];
        for w in weights {
            exps[w - 1] += 1;
        }
        Monomial::new(exps)
    }
}

impl fmt::Display for Tiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cells {
            f.write_str(match c {
                Cell::Black => "B",
                Cell::Gray => "G",
            })?;
        }
        Ok(())
    }
}

fn admissible(count: usize, s: usize) -> bool {
    count % (s + 1) <= 1
}

/// Every path of length `n+k-1` with `k` `H` steps and `n-1` `V` steps whose
/// per-level `H` counts are congruent to 0 or 1 mod `s+1`, in lexicographic
/// step order (`H < V`).
///
/// Brute force: walks all placements of the `H` steps and filters.
pub fn gen_lattice_paths(n: usize, k: usize, s: usize) -> impl Iterator<Item = LatticePath> {
    assert!(n >= 1 && s >= 1, "need n >= 1 and s >= 1");
    let len = n + k - 1;
    (0..len).combinations(k).filter_map(move |hs| {
        let mut steps = vec![Step::V; len];
        for i in hs {
            steps[i] = Step::H;
        }
        let p = LatticePath::new(steps);
        p.level_counts()
            .iter()
            .all(|&c| admissible(c, s))
            .then_some(p)
    })
}

/// Every board with `k` black and `n-1` gray squares whose maximal black
/// runs have lengths congruent to 0 or 1 mod `s+1`, ordered by the black
/// positions (`Black < Gray`).
pub fn gen_tilings(n: usize, k: usize, s: usize) -> impl Iterator<Item = Tiling> {
    assert!(n >= 1 && s >= 1, "need n >= 1 and s >= 1");
    let len = n + k - 1;
    (0..len).combinations(k).filter_map(move |blacks| {
        let mut cells = vec![Cell::Gray; len];
        for i in blacks {
            cells[i] = Cell::Black;
        }
        let t = Tiling::new(cells);
        t.black_runs()
            .iter()
            .all(|&r| admissible(r, s))
            .then_some(t)
    })
}

/// `V -> gray`, `H -> black`.
pub fn path_to_tiling(p: &LatticePath) -> Tiling {
    Tiling::new(
        p.steps()
            .iter()
            .map(|s| match s {
                Step::H => Cell::Black,
                Step::V => Cell::Gray,
            })
            .collect(),
    )
}

pub fn tiling_to_path(t: &Tiling) -> LatticePath {
    LatticePath::new(
        t.cells()
            .iter()
            .map(|c| match c {
                Cell::Black => Step::H,
                Cell::Gray => Step::V,
            })
            .collect(),
    )
}

/// Sum of monomial weights over a family of objects.
pub fn weight_sum<I, T>(items: I, weight: impl Fn(&T) -> Monomial) -> Polynomial
where
    I: IntoIterator<Item = T>,
{
    let mut p = Polynomial::zero();
    for it in items {
        p.add_term(weight(&it), 1.into());
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::{modular_sym, Method};
    use std::collections::BTreeSet;

    fn fig_weight() -> Monomial {
        // x2^6 x4 x5 x6^4
        Monomial::new(vec![0, 6, 0, 1, 1, 4])
    }

    #[test]
    fn four_paths_for_m3_three_vars() {
        let paths: Vec<_> = gen_lattice_paths(3, 3, 2).collect();
        assert_eq!(paths.len(), 4);
        let strs: Vec<String> = paths.iter().map(|p| p.to_string()).collect();
        assert_eq!(strs, ["HHHVV", "HVHVH", "VHHHV", "VVHHH"]);
        let sum = weight_sum(paths, LatticePath::weight);
        assert_eq!(sum.to_string(), "x1^3 + x1*x2*x3 + x2^3 + x3^3");
    }

    #[test]
    fn empty_degree_path() {
        let paths: Vec<_> = gen_lattice_paths(4, 0, 2).collect();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].to_string(), "VVV");
        assert!(paths[0].weight().is_one());
    }

    #[test]
    fn figure_path_and_tiling_exist() {
        assert!(gen_lattice_paths(6, 12, 2).any(|p| p.weight() == fig_weight()));
        let t = gen_tilings(6, 12, 2)
            .find(|t| t.weight() == fig_weight())
            .unwrap();
        let p = tiling_to_path(&t);
        assert_eq!(p.weight(), fig_weight());
        assert_eq!(path_to_tiling(&p), t);
    }

    #[test]
    fn four_tilings_and_single_level() {
        let tilings: Vec<_> = gen_tilings(3, 3, 2).collect();
        assert_eq!(tilings.len(), 4);
        let strs: BTreeSet<String> = tilings.iter().map(|t| t.to_string()).collect();
        let want: BTreeSet<String> = ["BBBGG", "GBBBG", "GGBBB", "BGBGB"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(strs, want);
        for s in 1..=3 {
            for k in 0..10 {
                let c = gen_tilings(1, k, s).count();
                assert_eq!(c, usize::from(k % (s + 1) <= 1), "k={k} s={s}");
            }
        }
    }

    #[test]
    fn bijection_round_trip() {
        let paths: Vec<_> = gen_lattice_paths(4, 5, 2).collect();
        let tilings: BTreeSet<Tiling> = gen_tilings(4, 5, 2).collect();
        let images: BTreeSet<Tiling> = paths.iter().map(path_to_tiling).collect();
        assert_eq!(images, tilings);
        for p in &paths {
            let t = path_to_tiling(p);
            assert_eq!(tiling_to_path(&t), *p);
            assert_eq!(t.weight(), p.weight());
        }
        assert_eq!(
            path_to_tiling(&LatticePath::new(vec![Step::V; 3])).to_string(),
            "GGG"
        );
    }

    #[test]
    fn weight_sums_match_modular() {
        for n in 1..=4 {
            for k in 0..=8 {
                for s in 1..=3 {
                    let m = modular_sym(n, k, s, Method::Enumeration);
                    assert_eq!(
                        weight_sum(gen_lattice_paths(n, k, s), LatticePath::weight),
                        m
                    );
                    assert_eq!(weight_sum(gen_tilings(n, k, s), Tiling::weight), m);
                }
            }
        }
    }

    #[test]
    fn paths_are_sorted_and_unique() {
        let v: Vec<_> = gen_lattice_paths(4, 6, 1).collect();
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }
}
