//! Test-side brute force for the graph classifier: exhaustive generation
//! of connected multigraph isomorphism classes, and an independent
//! semi-definiteness oracle through the characteristic polynomial.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use sigdefect::arith::Rational;
use sigdefect::plumbing::PlumbingGraph;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    pub n: usize,
    pub mult: Vec<Vec<u8>>,
}

impl MultiGraph {
    fn single() -> Self {
        MultiGraph { n: 1, mult: vec![vec![0]] }
    }

    fn degree(&self, v: usize) -> u32 {
        self.mult[v].iter().map(|&m| m as u32).sum()
    }

    fn total_mult(&self) -> u32 {
        let mut acc = 0;
        for u in 0..self.n {
            for v in u + 1..self.n {
                acc += self.mult[u][v] as u32;
            }
        }
        acc
    }

    /// True when the total multiplicity exceeds the vertex count, i.e.
    /// the graph sits past the semi-definite horizon.
    pub fn is_excess_level(&self) -> bool {
        self.total_mult() > self.n as u32
    }

    fn add_pendant(&self, attach: usize) -> Self {
        let n = self.n + 1;
        let mut mult = vec![vec![0u8; n]; n];
        for u in 0..self.n {
            for v in 0..self.n {
                mult[u][v] = self.mult[u][v];
            }
        }
        mult[attach][n - 1] = 1;
        mult[n - 1][attach] = 1;
        MultiGraph { n, mult }
    }

    fn bump(&self, u: usize, v: usize) -> Self {
        let mut g = self.clone();
        g.mult[u][v] += 1;
        g.mult[v][u] += 1;
        g
    }

    /// Twin classes: u and v are twins when swapping them is an
    /// automorphism, i.e. their rows agree away from the pair.
    fn twin_classes(&self) -> Vec<usize> {
        let mut class = vec![usize::MAX; self.n];
        let mut next = 0;
        for u in 0..self.n {
            if class[u] != usize::MAX {
                continue;
            }
            class[u] = next;
            for v in u + 1..self.n {
                if class[v] != usize::MAX {
                    continue;
                }
                let twin = (0..self.n)
                    .filter(|&w| w != u && w != v)
                    .all(|w| self.mult[u][w] == self.mult[v][w]);
                if twin {
                    class[v] = next;
                }
            }
            next += 1;
        }
        class
    }

    fn string_for(&self, perm: &[usize]) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.n * (self.n - 1) / 2);
        for (j, &v) in perm.iter().enumerate() {
            for &u in &perm[..j] {
                out.push(self.mult[u][v]);
            }
        }
        out
    }

    /// Lexicographically minimal upper-triangular string over all vertex
    /// permutations, by branch and bound with twin pruning.
    fn canonical_key(&self) -> Vec<u8> {
        const CAP: usize = 12;
        let n = self.n;
        assert!(n <= CAP);
        let mut seed: Vec<usize> = (0..n).collect();
        seed.sort_by_key(|&v| self.degree(v));
        let best_vec = self.string_for(&seed);
        let mut search = MinSearch {
            n,
            m: [0; CAP * CAP],
            twins: [0; CAP],
            best: [0; CAP * (CAP - 1) / 2],
            len: best_vec.len(),
        };
        for u in 0..n {
            for v in 0..n {
                search.m[u * CAP + v] = self.mult[u][v];
            }
        }
        for (v, c) in self.twin_classes().into_iter().enumerate() {
            search.twins[v] = c;
        }
        search.best[..best_vec.len()].copy_from_slice(&best_vec);
        let mut perm = [0usize; CAP];
        let mut used = [false; CAP];
        let mut cur = [0u8; CAP * (CAP - 1) / 2];
        search.run(0, 0, &mut perm, &mut used, &mut cur, true);
        search.best[..search.len].to_vec()
    }

    pub fn to_plumbing(&self) -> PlumbingGraph {
        let mut g = PlumbingGraph::new(self.n).unwrap();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.mult[u][v] > 0 {
                    g.add_edge(u, v, self.mult[u][v] as u32).unwrap();
                }
            }
        }
        g
    }
}

/// Flat-array state of the minimal-string search.
struct MinSearch {
    n: usize,
    m: [u8; 144],
    twins: [usize; 12],
    best: [u8; 66],
    len: usize,
}

impl MinSearch {
    fn run(
        &mut self,
        depth: usize,
        pos: usize,
        perm: &mut [usize; 12],
        used: &mut [bool; 12],
        cur: &mut [u8; 66],
        tight: bool,
    ) {
        if depth == self.n {
            if cur[..self.len] < self.best[..self.len] {
                self.best[..self.len].copy_from_slice(&cur[..self.len]);
            }
            return;
        }
        // swapping unused twins is an automorphism: branch on one per class
        let mut seen_class = [false; 12];
        for v in 0..self.n {
            if used[v] {
                continue;
            }
            let class = self.twins[v];
            if seen_class[class] {
                continue;
            }
            seen_class[class] = true;
            let mut next_tight = tight;
            let mut prune = false;
            for (i, slot) in (0..depth).zip(pos..pos + depth) {
                let entry = self.m[perm[i] * 12 + v];
                cur[slot] = entry;
                if next_tight {
                    if entry > self.best[slot] {
                        prune = true;
                        // the remaining entries of this segment are moot
                        for s in slot + 1..pos + depth {
                            cur[s] = 0;
                        }
                        break;
                    }
                    if entry < self.best[slot] {
                        next_tight = false;
                    }
                }
            }
            if !prune {
                used[v] = true;
                perm[depth] = v;
                self.run(depth + 1, pos + depth, perm, used, cur, next_tight);
                used[v] = false;
            }
        }
    }
}

/// Every connected multigraph isomorphism class with at most `max_n`
/// vertices and total edge multiplicity within `excess` of the vertex
/// count (per-edge multiplicity at most 2), grown by pendant additions
/// and edge bumps up to isomorphism.
pub fn connected_multigraphs(max_n: usize, excess: u32) -> Vec<MultiGraph> {
    let mut seen: HashSet<(usize, Vec<u8>)> = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    let g0 = MultiGraph::single();
    seen.insert((1, g0.canonical_key()));
    queue.push_back(g0.clone());
    out.push(g0);
    while let Some(g) = queue.pop_front() {
        let twins = g.twin_classes();
        let mut candidates = Vec::new();
        if g.n < max_n {
            // attaching to twins gives isomorphic results
            let mut done = HashSet::new();
            for attach in 0..g.n {
                if done.insert(twins[attach]) {
                    candidates.push(g.add_pendant(attach));
                }
            }
        }
        if g.n >= 2 && g.total_mult() < g.n as u32 + excess {
            let mut done = HashSet::new();
            for u in 0..g.n {
                for v in u + 1..g.n {
                    if g.mult[u][v] < 2 {
                        let pair =
                            (twins[u].min(twins[v]), twins[u].max(twins[v]), g.mult[u][v]);
                        if done.insert(pair) {
                            candidates.push(g.bump(u, v));
                        }
                    }
                }
            }
        }
        for c in candidates {
            let key = (c.n, c.canonical_key());
            if seen.insert(key) {
                queue.push_back(c.clone());
                out.push(c);
            }
        }
    }
    out
}

/// `sum_j mult[i][j] marks[j] = 2 marks[i]` for every vertex.
pub fn marks_annihilate(g: &MultiGraph, marks: &[u64]) -> bool {
    (0..g.n).all(|i| {
        let s: u64 = (0..g.n).map(|j| g.mult[i][j] as u64 * marks[j]).sum();
        s == 2 * marks[i]
    })
}

/// Characteristic polynomial of an integer matrix by the
/// Faddeev-LeVerrier recursion:
/// `det(xI - B) = x^n + c[1] x^(n-1) + ... + c[n]`.
fn char_poly(b: &[Vec<i128>]) -> Vec<i128> {
    let n = b.len();
    let mut c = vec![0i128; n + 1];
    c[0] = 1;
    let mut m = vec![vec![0i128; n]; n]; // M_0 = 0
    for k in 1..=n {
        // M_k = B (M_{k-1} + c_{k-1} I)
        let mut t = m.clone();
        for (i, row) in t.iter_mut().enumerate() {
            row[i] += c[k - 1];
        }
        let mut next = vec![vec![0i128; n]; n];
        for i in 0..n {
            for (j, cell) in next[i].iter_mut().enumerate() {
                let mut acc = 0i128;
                for (l, trow) in t.iter().enumerate() {
                    acc += b[i][l] * trow[j];
                }
                *cell = acc;
            }
        }
        m = next;
        let trace: i128 = (0..n).map(|i| m[i][i]).sum();
        c[k] = -trace / k as i128;
    }
    c
}

/// The semi-definiteness-plus-null-vector oracle: `Some(marks)` iff
/// `2I - A` has only non-negative eigenvalues and a kernel, in which case
/// the kernel is one-dimensional with a strictly positive generator.
pub fn oracle_affine(g: &MultiGraph) -> Option<Vec<u64>> {
    let n = g.n;
    let b: Vec<Vec<i128>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { 2 } else { -(g.mult[i][j] as i128) })
                .collect()
        })
        .collect();
    let c = char_poly(&b);
    // all eigenvalues are real: non-negative iff the elementary symmetric
    // functions e_k = (-1)^k c_k are all non-negative
    for (k, &ck) in c.iter().enumerate().skip(1) {
        let ek = if k % 2 == 0 { ck } else { -ck };
        if ek < 0 {
            return None;
        }
    }
    if c[n] != 0 {
        return None; // positive definite: no null vector at all
    }
    let kernel = rational_kernel(&b);
    assert_eq!(kernel.len(), 1, "connected semi-definite graph must have a simple kernel");
    let marks = primitive_positive(&kernel[0]);
    assert!(marks.iter().all(|m| *m > 0));
    Some(marks)
}

/// Kernel basis of an integer matrix by rational reduction.
fn rational_kernel(b: &[Vec<i128>]) -> Vec<Vec<Rational>> {
    let n = b.len();
    let mut a: Vec<Vec<Rational>> = b
        .iter()
        .map(|row| row.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect())
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(r) = (row..n).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(row, r);
        let d = a[row][col].clone();
        for x in a[row].iter_mut() {
            *x = &*x / &d;
        }
        for r2 in 0..n {
            if r2 != row && !a[r2][col].is_zero() {
                let f = a[r2][col].clone();
                for c2 in 0..n {
                    let adj = &f * &a[row][c2];
                    a[r2][c2] = &a[r2][c2] - adj;
                }
            }
        }
        pivots.push((row, col));
        row += 1;
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.iter().any(|&(_, pc)| pc == *c)) {
        let mut v = vec![Rational::zero(); n];
        v[free] = Rational::one();
        for &(r, c) in &pivots {
            v[c] = -a[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

fn primitive_positive(v: &[Rational]) -> Vec<u64> {
    use num_integer::Integer;
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = v.iter().map(|x| x.numer() * &lcm / x.denom()).collect();
    let mut gcd = BigInt::zero();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    for x in ints.iter_mut() {
        *x = &*x / &gcd;
    }
    if ints.iter().all(|x| x.is_negative()) {
        for x in ints.iter_mut() {
            *x = -&*x;
        }
    }
    ints.into_iter()
        .map(|x| u64::try_from(x).expect("positive primitive marks"))
        .collect()
}
