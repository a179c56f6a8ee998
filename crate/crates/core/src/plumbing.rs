//! Configurations of (-2)-spheres: intersection matrices, affine ADE
//! recognition with multiplicity vectors, the tangency bound, and the
//! circle-equivariant plumbing weight recursions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{ratio, PrimeOrder, Rational};
use crate::error::{Error, Result};

/// A configuration of spheres with transverse intersections, encoded as a
/// multigraph; vertices carry self-intersections (-2 by default) and edges
/// carry intersection multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlumbingGraph {
    vertex_count: usize,
    self_intersections: Vec<i64>,
    edges: BTreeMap<(usize, usize), u32>,
    tangency: bool,
}

impl PlumbingGraph {
    pub fn new(vertex_count: usize) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidInput("a graph needs at least one vertex".into()));
        }
        Ok(PlumbingGraph {
            vertex_count,
            self_intersections: vec![-2; vertex_count],
            edges: BTreeMap::new(),
            tangency: false,
        })
    }

    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = PlumbingGraph::new(vertex_count)?;
        for &(u, v) in edges {
            g.add_edge(u, v, 1)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize, multiplicity: u32) -> Result<()> {
        if u == v {
            return Err(Error::InvalidInput(format!("loop edge at vertex {u}")));
        }
        if u >= self.vertex_count || v >= self.vertex_count {
            return Err(Error::InvalidInput(format!(
                "edge ({u},{v}) out of range for {} vertices",
                self.vertex_count
            )));
        }
        if multiplicity == 0 {
            return Err(Error::InvalidInput("edge multiplicity must be positive".into()));
        }
        *self.edges.entry((u.min(v), u.max(v))).or_insert(0) += multiplicity;
        Ok(())
    }

    /// Flag the order-2 tangency configuration: two spheres, one contact.
    pub fn set_tangency(&mut self) -> Result<()> {
        if self.vertex_count != 2 || self.edges.len() != 1 {
            return Err(Error::InvalidInput(
                "the tangency flag applies to a two-vertex, single-contact configuration".into(),
            ));
        }
        self.tangency = true;
        Ok(())
    }

    pub fn set_self_intersection(&mut self, v: usize, s: i64) -> Result<()> {
        if v >= self.vertex_count {
            return Err(Error::InvalidInput(format!("vertex {v} out of range")));
        }
        self.self_intersections[v] = s;
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn tangency(&self) -> bool {
        self.tangency
    }

    pub fn self_intersections(&self) -> &[i64] {
        &self.self_intersections
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.edges.iter().map(|(&(u, v), &m)| (u, v, m))
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        *self.edges.get(&(u.min(v), u.max(v))).unwrap_or(&0)
    }

    /// Degree counted with multiplicity.
    pub fn degree(&self, v: usize) -> u64 {
        self.edges
            .iter()
            .map(|(&(a, b), &m)| if a == v || b == v { m as u64 } else { 0 })
            .sum()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for (&(a, b), _) in &self.edges {
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Parse the edge-list text format:
    ///
    /// ```text
    /// # comment
    /// vertices 5
    /// tangency
    /// selfint 0 -2
    /// 0 1
    /// 0 2 2
    /// ```
    ///
    /// `vertices` is optional when every vertex appears in an edge.
    pub fn parse(input: &str) -> Result<Self> {
        let mut declared: Option<usize> = None;
        let mut tangency = false;
        let mut selfints: Vec<(usize, i64)> = Vec::new();
        let mut edges: Vec<(usize, usize, u32)> = Vec::new();
        let mut max_vertex = 0usize;
        for (lineno, raw) in input.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad =
                |msg: &str| Error::InvalidInput(format!("line {}: {msg}: `{line}`", lineno + 1));
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields[0] {
                "vertices" => {
                    let n = fields
                        .get(1)
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| bad("expected `vertices N`"))?;
                    declared = Some(n);
                }
                "tangency" => tangency = true,
                "selfint" => {
                    let v = fields.get(1).and_then(|s| s.parse().ok());
                    let s = fields.get(2).and_then(|s| s.parse().ok());
                    match (v, s) {
                        (Some(v), Some(s)) => selfints.push((v, s)),
                        _ => return Err(bad("expected `selfint v value`")),
                    }
                }
                _ => {
                    let u: usize =
                        fields[0].parse().map_err(|_| bad("expected `v1 v2 [mult]`"))?;
                    let v: usize = fields
                        .get(1)
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| bad("expected `v1 v2 [mult]`"))?;
                    let m: u32 = match fields.get(2) {
                        Some(s) => s.parse().map_err(|_| bad("unreadable multiplicity"))?,
                        None => 1,
                    };
                    max_vertex = max_vertex.max(u).max(v);
                    edges.push((u, v, m));
                }
            }
        }
        if edges.is_empty() && declared.is_none() {
            return Err(Error::InvalidInput("empty graph input".into()));
        }
        let count = declared.unwrap_or(max_vertex + 1).max(max_vertex + 1);
        let mut g = PlumbingGraph::new(count)?;
        for (u, v, m) in edges {
            g.add_edge(u, v, m)?;
        }
        for (v, s) in selfints {
            g.set_self_intersection(v, s)?;
        }
        if tangency {
            g.set_tangency()?;
        }
        Ok(g)
    }

    /// Plain DOT emission for visual inspection.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph plumbing {\n");
        for v in 0..self.vertex_count {
            out.push_str(&format!("  v{v} [label=\"{} ({})\"];\n", v, self.self_intersections[v]));
        }
        for (&(u, v), &m) in &self.edges {
            for _ in 0..m {
                if self.tangency {
                    out.push_str(&format!("  v{u} -- v{v} [label=\"tangency\"];\n"));
                } else {
                    out.push_str(&format!("  v{u} -- v{v};\n"));
                }
            }
        }
        out.push_str("}\n");
        out
    }

    /// The cycle on k vertices (k >= 3), or the double edge for k = 2.
    pub fn cycle(k: usize) -> Result<Self> {
        let mut g = PlumbingGraph::new(k)?;
        if k == 2 {
            g.add_edge(0, 1, 2)?;
        } else if k > 2 {
            for v in 0..k {
                g.add_edge(v, (v + 1) % k, 1)?;
            }
        } else {
            return Err(Error::InvalidInput("a cycle needs at least two vertices".into()));
        }
        Ok(g)
    }

    /// The affine D-type tree on n+1 vertices, n >= 4: a path with a fork
    /// of two leaves at each end (n = 4 degenerates to the 4-leaf star).
    pub fn dtilde_graph(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::InvalidInput("affine D graphs need n >= 4".into()));
        }
        let count = n + 1;
        let mut g = PlumbingGraph::new(count)?;
        // vertices 0..count-4 form the central path; the last four are leaves
        let path_len = count - 4;
        for v in 0..path_len.saturating_sub(1) {
            g.add_edge(v, v + 1, 1)?;
        }
        let (first, last) = (0, path_len - 1);
        g.add_edge(first, count - 4, 1)?;
        g.add_edge(first, count - 3, 1)?;
        g.add_edge(last, count - 2, 1)?;
        g.add_edge(last, count - 1, 1)?;
        Ok(g)
    }

    /// The affine E6/E7/E8 trees.
    pub fn etilde_graph(which: u8) -> Result<Self> {
        let arms: &[usize] = match which {
            6 => &[2, 2, 2],
            7 => &[1, 3, 3],
            8 => &[1, 2, 5],
            _ => return Err(Error::InvalidInput(format!("no affine E{which} graph"))),
        };
        let count = 1 + arms.iter().sum::<usize>();
        let mut g = PlumbingGraph::new(count)?;
        let mut next = 1;
        for &len in arms {
            let mut prev = 0;
            for _ in 0..len {
                g.add_edge(prev, next, 1)?;
                prev = next;
                next += 1;
            }
        }
        Ok(g)
    }
}

/// The normalized intersection matrix: `q_ii = 1`, `q_ij = -(mult)/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct QMatrix(pub Vec<Vec<Rational>>);

impl QMatrix {
    pub fn size(&self) -> usize {
        self.0.len()
    }
}

/// Build the Q matrix of a transverse configuration.
pub fn q_matrix(graph: &PlumbingGraph) -> Result<QMatrix> {
    if graph.tangency() {
        return Err(Error::TangencyFlagged);
    }
    let n = graph.vertex_count();
    let mut m = vec![vec![Rational::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Rational::one();
    }
    for (u, v, mult) in graph.edges() {
        m[u][v] = ratio(-(mult as i64), 2);
        m[v][u] = ratio(-(mult as i64), 2);
    }
    Ok(QMatrix(m))
}

/// The recognized family of a configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    ATilde(usize),
    DTilde(usize),
    ETilde6,
    ETilde7,
    ETilde8,
    NotAffine,
}

impl std::fmt::Display for GraphKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GraphKind::ATilde(n) => write!(f, "A-tilde({n})"),
            GraphKind::DTilde(n) => write!(f, "D-tilde({n})"),
            GraphKind::ETilde6 => write!(f, "E-tilde(6)"),
            GraphKind::ETilde7 => write!(f, "E-tilde(7)"),
            GraphKind::ETilde8 => write!(f, "E-tilde(8)"),
            GraphKind::NotAffine => write!(f, "not-affine"),
        }
    }
}

/// Classification outcome; affine kinds carry the primitive positive
/// multiplicity vector satisfying `sum_j n_j (C_j . C_i) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphClass {
    pub kind: GraphKind,
    pub multiplicities: Option<Vec<u64>>,
}

impl GraphClass {
    fn not_affine() -> Self {
        GraphClass { kind: GraphKind::NotAffine, multiplicities: None }
    }

    pub fn is_affine(&self) -> bool {
        self.kind != GraphKind::NotAffine
    }
}

fn check_classify_input(graph: &PlumbingGraph) -> Result<()> {
    if graph.tangency() {
        return Err(Error::TangencyFlagged);
    }
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some(v) = graph.self_intersections().iter().position(|&s| s != -2) {
        return Err(Error::InvalidInput(format!(
            "classification assumes (-2)-spheres; vertex {v} has self-intersection {}",
            graph.self_intersections()[v]
        )));
    }
    Ok(())
}

/// Classify by exact linear algebra: the configuration is affine exactly
/// when Q is positive semi-definite with a strictly positive null vector;
/// the family is then named from the degree pattern.
pub fn classify(graph: &PlumbingGraph) -> Result<GraphClass> {
    check_classify_input(graph)?;
    let q = q_matrix(graph)?;
    if !is_psd(q.0.clone()) {
        return Ok(GraphClass::not_affine());
    }
    let Some(marks) = positive_null_vector(&q.0) else {
        return Ok(GraphClass::not_affine());
    };
    let kind = name_family(graph);
    debug_assert_ne!(kind, GraphKind::NotAffine);
    Ok(GraphClass { kind, multiplicities: Some(marks) })
}

/// Exact positive semi-definiteness via symmetric elimination: negative
/// diagonal rejects; a zero diagonal with nonzero residual block rejects;
/// positive pivots are eliminated by their Schur complement.
fn is_psd(mut m: Vec<Vec<Rational>>) -> bool {
    let n = m.len();
    let mut active: Vec<usize> = (0..n).collect();
    loop {
        if active.iter().any(|&i| m[i][i] < Rational::zero()) {
            return false;
        }
        let Some(&piv) = active.iter().find(|&&i| m[i][i] > Rational::zero()) else {
            // all diagonal entries vanish: PSD iff the block is zero
            return active
                .iter()
                .all(|&i| active.iter().all(|&j| m[i][j].is_zero()));
        };
        active.retain(|&i| i != piv);
        if active.is_empty() {
            return true;
        }
        let d = m[piv][piv].clone();
        for &i in &active {
            for &j in &active {
                let adj = &m[i][piv] * &m[piv][j] / &d;
                m[i][j] = &m[i][j] - adj;
            }
        }
    }
}

/// A strictly positive primitive integer null vector of the matrix, if the
/// kernel is one-dimensional and admits one.
fn positive_null_vector(m: &[Vec<Rational>]) -> Option<Vec<u64>> {
    let n = m.len();
    let mut a = m.to_vec();
    // rational RREF
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
        if row == n {
            break;
        }
    }
    if n - row != 1 {
        return None;
    }
    let free_col = (0..n).find(|c| !pivots.iter().any(|&(_, pc)| pc == *c))?;
    let mut v = vec![Rational::zero(); n];
    v[free_col] = Rational::one();
    for &(r, c) in &pivots {
        v[c] = -a[r][free_col].clone();
    }
    // scale to a primitive integer vector
    let mut lcm = BigInt::one();
    for x in &v {
        lcm = lcm.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = v.iter().map(|x| x.numer() * &lcm / x.denom()).collect();
    let mut gcd = BigInt::zero();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    if gcd.is_zero() {
        return None;
    }
    for x in ints.iter_mut() {
        *x = &*x / &gcd;
    }
    if ints.iter().all(|x| x.is_negative()) {
        for x in ints.iter_mut() {
            *x = -&*x;
        }
    }
    if !ints.iter().all(|x| x.is_positive()) {
        return None;
    }
    Some(ints.into_iter().map(|x| u64::try_from(x).expect("small marks")).collect())
}

/// Name the affine family of a graph already known to be affine.
fn name_family(graph: &PlumbingGraph) -> GraphKind {
    let n = graph.vertex_count();
    let degrees: Vec<u64> = (0..n).map(|v| graph.degree(v)).collect();
    if degrees.iter().all(|&d| d == 2) {
        return GraphKind::ATilde(n - 1);
    }
    let deg4 = degrees.iter().filter(|&&d| d == 4).count();
    let deg3 = degrees.iter().filter(|&&d| d == 3).count();
    if deg4 == 1 && n == 5 {
        return GraphKind::DTilde(4);
    }
    if deg3 == 2 {
        return GraphKind::DTilde(n - 1);
    }
    if deg3 == 1 {
        let center = degrees.iter().position(|&d| d == 3).unwrap();
        let mut arms = arm_lengths(graph, center);
        arms.sort_unstable();
        return match arms.as_slice() {
            [2, 2, 2] => GraphKind::ETilde6,
            [1, 3, 3] => GraphKind::ETilde7,
            [1, 2, 5] => GraphKind::ETilde8,
            _ => GraphKind::NotAffine,
        };
    }
    GraphKind::NotAffine
}

fn neighbors(graph: &PlumbingGraph, v: usize) -> Vec<usize> {
    (0..graph.vertex_count()).filter(|&w| w != v && graph.multiplicity(v, w) > 0).collect()
}

/// Lengths of the simple paths leaving a vertex of a tree.
fn arm_lengths(graph: &PlumbingGraph, center: usize) -> Vec<usize> {
    neighbors(graph, center)
        .into_iter()
        .map(|mut cur| {
            let mut prev = center;
            let mut len = 1;
            loop {
                let next: Vec<usize> =
                    neighbors(graph, cur).into_iter().filter(|&w| w != prev).collect();
                match next.as_slice() {
                    [w] => {
                        prev = cur;
                        cur = *w;
                        len += 1;
                    }
                    [] => return len,
                    _ => return len, // branches again; caller rejects via arm pattern
                }
            }
        })
        .collect()
}

/// Classify by pure shape matching against the affine families, with the
/// tabulated multiplicity marks. Independent of the linear-algebra route.
pub fn classify_by_shape(graph: &PlumbingGraph) -> Result<GraphClass> {
    check_classify_input(graph)?;
    let n = graph.vertex_count();
    let degrees: Vec<u64> = (0..n).map(|v| graph.degree(v)).collect();
    let edge_total: u64 = graph.edges().map(|(_, _, m)| m as u64).sum();

    if graph.edges().any(|(_, _, m)| m >= 2) {
        // the double edge on two vertices is the smallest affine cycle
        if n == 2 && edge_total == 2 {
            return Ok(GraphClass {
                kind: GraphKind::ATilde(1),
                multiplicities: Some(vec![1, 1]),
            });
        }
        return Ok(GraphClass::not_affine());
    }
    if degrees.iter().all(|&d| d == 2) && n >= 3 {
        return Ok(GraphClass {
            kind: GraphKind::ATilde(n - 1),
            multiplicities: Some(vec![1; n]),
        });
    }
    if edge_total as usize != n - 1 {
        return Ok(GraphClass::not_affine());
    }
    // tree cases
    let leaves = degrees.iter().filter(|&&d| d == 1).count();
    let deg2 = degrees.iter().filter(|&&d| d == 2).count();
    let deg3: Vec<usize> =
        (0..n).filter(|&v| degrees[v] == 3).collect();
    let deg4 = degrees.iter().filter(|&&d| d == 4).count();

    if deg4 == 1 && leaves == 4 && n == 5 {
        let marks =
            (0..n).map(|v| if degrees[v] == 4 { 2 } else { 1 }).collect();
        return Ok(GraphClass { kind: GraphKind::DTilde(4), multiplicities: Some(marks) });
    }
    if deg3.len() == 2 && leaves == 4 && deg2 == n - 6 {
        // both forks must carry two leaves and the rest must be a path
        let fork_leaves_ok = deg3.iter().all(|&f| {
            neighbors(graph, f).iter().filter(|&&w| degrees[w] == 1).count() == 2
        });
        if fork_leaves_ok {
            let marks = (0..n).map(|v| if degrees[v] == 1 { 1 } else { 2 }).collect();
            return Ok(GraphClass {
                kind: GraphKind::DTilde(n - 1),
                multiplicities: Some(marks),
            });
        }
        return Ok(GraphClass::not_affine());
    }
    if deg3.len() == 1 && leaves == 3 {
        let center = deg3[0];
        let arms: Vec<Vec<usize>> = neighbors(graph, center)
            .into_iter()
            .map(|mut cur| {
                let mut prev = center;
                let mut arm = vec![cur];
                while let [w] = neighbors(graph, cur)
                    .into_iter()
                    .filter(|&w| w != prev)
                    .collect::<Vec<_>>()[..]
                {
                    prev = cur;
                    cur = w;
                    arm.push(w);
                }
                arm
            })
            .collect();
        let mut lens: Vec<usize> = arms.iter().map(|a| a.len()).collect();
        lens.sort_unstable();
        // tabulated center and outward arm marks per family
        let (kind, center_mark, arm_marks): (GraphKind, u64, fn(usize) -> Vec<u64>) =
            match lens.as_slice() {
                [2, 2, 2] => (GraphKind::ETilde6, 3, |_| vec![2, 1]),
                [1, 3, 3] => (GraphKind::ETilde7, 4, |len| {
                    if len == 1 { vec![2] } else { vec![3, 2, 1] }
                }),
                [1, 2, 5] => (GraphKind::ETilde8, 6, |len| match len {
                    1 => vec![3],
                    2 => vec![4, 2],
                    _ => vec![5, 4, 3, 2, 1],
                }),
                _ => return Ok(GraphClass::not_affine()),
            };
        let mut marks = vec![0u64; n];
        marks[center] = center_mark;
        for arm in &arms {
            for (v, m) in arm.iter().zip(arm_marks(arm.len())) {
                marks[*v] = m;
            }
        }
        return Ok(GraphClass { kind, multiplicities: Some(marks) });
    }
    Ok(GraphClass::not_affine())
}

/// The tangency admissibility bound: a one-contact pair of multiplicity
/// n_i, n_j curves is admissible iff n_i = n_j and the contact order is 2.
pub fn tangency_multiplicity_check(n_i: u64, n_j: u64, intersection: i64) -> bool {
    n_i == n_j && intersection == 2
}

/// Integer weights of a circle action on a plumbing piece.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightPair {
    pub u: i64,
    pub v: i64,
}

/// A 2x2 integer matrix acting on weight pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TransferMatrix(pub [[i64; 2]; 2]);

impl TransferMatrix {
    pub fn apply(&self, w: WeightPair) -> WeightPair {
        WeightPair {
            u: self.0[0][0] * w.u + self.0[0][1] * w.v,
            v: self.0[1][0] * w.u + self.0[1][1] * w.v,
        }
    }
}

/// Exit weights of one (-2)-sphere: `(u, v) -> (-u, 2u + v)`.
pub fn sphere_exit(w: WeightPair) -> WeightPair {
    WeightPair { u: -w.u, v: 2 * w.u + w.v }
}

/// One step along the chain: exit the sphere, then the plumbing joint
/// swaps the two disk factors.
pub fn transfer_step(w: WeightPair) -> WeightPair {
    let e = sphere_exit(w);
    WeightPair { u: e.v, v: e.u }
}

/// Closed form of the chain recursion in the cycle convention (seed at
/// vertex 1, i >= 1): exit weights of the i-th sphere are
/// `[[-i, 1-i], [i+1, i]]` applied to the seed.
pub fn chain_transfer(i: u64) -> TransferMatrix {
    let i = i as i64;
    TransferMatrix([[-i, 1 - i], [i + 1, i]])
}

/// Closed form in the linear convention with seed index 0:
/// `[[-(i+1), -i], [i+2, i+1]]`, valid for i >= 0.
pub fn chain_transfer_dtilde(i: u64) -> TransferMatrix {
    let i = i as i64;
    TransferMatrix([[-(i + 1), -i], [i + 2, i + 1]])
}

/// Whether an affine D-type chain of n+1 spheres admits the action: runs
/// the weight recursion from the fixed-sphere seed (0, 1) over n-4 steps
/// and tests the exit weight mod p; equivalent to n = 4 mod p.
pub fn dtilde_congruence(n: u64, p: PrimeOrder) -> Result<bool> {
    if n < 4 {
        return Err(Error::InvalidInput(format!("affine D graphs need n >= 4, got {n}")));
    }
    let mut w = WeightPair { u: 0, v: 1 };
    for _ in 0..(n - 4) {
        w = transfer_step(w);
    }
    let exit = sphere_exit(w);
    Ok(exit.u.rem_euclid(p.as_i64()) == 0)
}

/// Closed-cycle consistency of the weight recursion: a cycle of k spheres
/// with seed weights (u, v) closes mod p iff `k (u + v) = 0 mod p`.
pub fn atilde_fixed_congruence(seed: WeightPair, k: u64, p: PrimeOrder) -> bool {
    let pv = p.as_i64();
    let sum = (seed.u + seed.v).rem_euclid(pv);
    let ok = (k % p.get()) as i64 * sum % pv == 0;
    // the same condition read off the composed cycle matrix, whose
    // entries mod p depend only on k mod p
    debug_assert_eq!(ok, {
        let exit = chain_transfer(k % p.get()).apply(seed);
        let closed = WeightPair { u: exit.v, v: exit.u };
        (closed.u - seed.u).rem_euclid(pv) == 0 && (closed.v - seed.v).rem_euclid(pv) == 0
    });
    ok
}

/// Exhaustively enumerate the rotation-number sequences `m_1, ..., m_k`
/// admissible around a cycle of k spheres:
///
/// * adjacent spheres are inverse-linked: `m_i' m_{i-1} = 1 mod p`,
/// * each sphere obeys `(1 + m_i') + (1 + m_i) = 0 mod p`,
/// * the chain closes cyclically,
/// * the weights `(u_i, v_i)` of the induced plumbing recursion satisfy
///   `v_{i,2} = u_{i,2} m_i mod p` and close mod p around the cycle.
///
/// The two per-sphere constraints force `m_i = -2 - m_{i-1}^{-1} mod p`, a
/// parabolic recurrence whose only cyclically-closed orbit inside 1..p is
/// the constant p-1; the search verifies that rather than assuming it.
pub fn atilde_rotation_sequences(p: PrimeOrder, k: u64) -> Result<Vec<Vec<u64>>> {
    if p.get() < 3 {
        return Err(Error::OccurrenceViolation(format!(
            "cycle rotation sequences need p >= 3, got p = {p}"
        )));
    }
    if k == 0 || k > 4 * p.get() {
        return Err(Error::BoundExceeded(format!(
            "cycle length k = {k} outside 1..={}",
            4 * p.get()
        )));
    }
    let pv = p.get() as i64;
    let inv = |x: i64| -> i64 {
        crate::arith::mod_inverse(x.rem_euclid(pv) as u64, p).expect("nonzero") as i64
    };
    let mut out = Vec::new();
    'start: for m1 in 1..pv {
        let mut seq = vec![m1];
        for _ in 1..k {
            let m = (-2 - inv(*seq.last().unwrap())).rem_euclid(pv);
            if m == 0 {
                continue 'start;
            }
            seq.push(m);
        }
        // cyclic closure of the recurrence
        if (-2 - inv(seq[k as usize - 1])).rem_euclid(pv) != m1 {
            continue;
        }
        // plumbing-weight consistency, seeded at (1, m_1')
        let seed = WeightPair { u: 1, v: inv(seq[k as usize - 1]) };
        for (i, &m) in seq.iter().enumerate() {
            let exit = chain_transfer(i as u64 + 1).apply(seed);
            if (exit.v - exit.u * m).rem_euclid(pv) != 0 {
                continue 'start;
            }
        }
        let exit = chain_transfer(k).apply(seed);
        if (exit.v - seed.u).rem_euclid(pv) != 0 || (exit.u - seed.v).rem_euclid(pv) != 0 {
            continue;
        }
        out.push(seq.into_iter().map(|m| m as u64).collect());
    }
    Ok(out)
}
