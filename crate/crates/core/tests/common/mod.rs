//! Slow, obviously-correct reference implementations shared by the
//! integration tests. Nothing here calls the library routine it checks.

#![allow(dead_code)]

use aromatic_core::elemental::{PolyScalar, PolyVecField};
use aromatic_core::forest::sigma;
use aromatic_core::series::CoeffMap;
use aromatic_core::substitution::{Monomial, SymbolicPoly};
use aromatic_core::{AromaticForest, Rational};
use num_traits::Zero;
use std::collections::{BTreeMap, HashMap};

pub type Succ = Vec<Option<usize>>;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn frac(p: i64, d: i64) -> Rational {
    Rational::new(p.into(), d.into())
}

pub fn forest(text: &str) -> AromaticForest {
    text.parse().unwrap_or_else(|e| panic!("{text:?}: {e}"))
}

/// Every permutation of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut next = p.clone();
            next.insert(pos, n - 1);
            out.push(next);
        }
    }
    out
}

/// Whether `perm` maps the graph `a` onto the graph `b`.
pub fn is_isomorphism(a: &[Option<usize>], b: &[Option<usize>], perm: &[usize]) -> bool {
    a.iter()
        .enumerate()
        .all(|(v, s)| b[perm[v]] == s.map(|t| perm[t]))
}

/// Automorphism count by trying every vertex permutation.
pub fn brute_sigma(succ: &[Option<usize>]) -> u64 {
    permutations(succ.len())
        .iter()
        .filter(|p| is_isomorphism(succ, succ, p))
        .count() as u64
}

fn invariant(succ: &[Option<usize>]) -> (usize, Vec<usize>) {
    let mut indegree = vec![0usize; succ.len()];
    for &t in succ.iter().flatten() {
        indegree[t] += 1;
    }
    indegree.sort_unstable();
    (succ.iter().filter(|s| s.is_none()).count(), indegree)
}

/// Isomorphism classes of a list of graphs, found by permutation search.
pub fn classes_by_brute_force(graphs: impl IntoIterator<Item = Succ>) -> Vec<Succ> {
    let mut buckets: HashMap<(usize, Vec<usize>), Vec<Succ>> = HashMap::new();
    let mut perms: HashMap<usize, Vec<Vec<usize>>> = HashMap::new();
    for g in graphs {
        let perms = perms
            .entry(g.len())
            .or_insert_with(|| permutations(g.len()));
        let reps = buckets.entry(invariant(&g)).or_default();
        if !reps
            .iter()
            .any(|r| perms.iter().any(|p| is_isomorphism(&g, r, p)))
        {
            reps.push(g);
        }
    }
    buckets.into_values().flatten().collect()
}

/// Every labelled graph on `n` vertices with out-degree at most one.
pub fn all_graphs(n: usize) -> Vec<Succ> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|g: Succ| {
                (0..=n).map(move |t| {
                    let mut g = g.clone();
                    g.push(if t == n { None } else { Some(t) });
                    g
                })
            })
            .collect();
    }
    out
}

/// Labelled rooted trees on `n` vertices with root 0 and every parent
/// smaller than its child; every unlabelled tree has such a labelling.
pub fn ordered_trees(n: usize) -> Vec<Succ> {
    if n == 0 {
        return vec![];
    }
    let mut out = vec![vec![None]];
    for v in 1..n {
        out = out
            .into_iter()
            .flat_map(|g: Succ| {
                (0..v).map(move |p| {
                    let mut g = g.clone();
                    g.push(Some(p));
                    g
                })
            })
            .collect();
    }
    out
}

/// The subgraph induced on `keep`, relabelled consecutively.
pub fn induced(succ: &[Option<usize>], keep: &[bool]) -> Succ {
    let mut index = vec![usize::MAX; succ.len()];
    let mut next = 0;
    for v in 0..succ.len() {
        if keep[v] {
            index[v] = next;
            next += 1;
        }
    }
    (0..succ.len())
        .filter(|&v| keep[v])
        .map(|v| succ[v].filter(|&t| keep[t]).map(|t| index[t]))
        .collect()
}

/// Coproduct terms `(P*, R)` from every successor-closed vertex subset.
pub fn brute_coproduct(phi: &AromaticForest) -> BTreeMap<(AromaticForest, AromaticForest), u64> {
    let succ = phi.successors();
    let n = succ.len();
    let mut out = BTreeMap::new();
    for mask in 0u32..(1 << n) {
        let in_r = |v: usize| mask >> v & 1 == 1;
        if (0..n).any(|v| in_r(v) && succ[v].is_some_and(|t| !in_r(t))) {
            continue;
        }
        let r: Vec<bool> = (0..n).map(in_r).collect();
        let p: Vec<bool> = r.iter().map(|x| !x).collect();
        let key = (
            AromaticForest::from_successors(&induced(succ, &p)),
            AromaticForest::from_successors(&induced(succ, &r)),
        );
        *out.entry(key).or_insert(0) += 1;
    }
    out
}

/// `(b·a)(φ)` summed over successor-closed subsets.
pub fn brute_composition(
    b: &CoeffMap<Rational>,
    a: &CoeffMap<Rational>,
    phi: &AromaticForest,
) -> Rational {
    brute_coproduct(phi)
        .into_iter()
        .map(|((l, r), m)| q(m as i64) * b.coeff(&l) * a.coeff(&r))
        .fold(Rational::zero(), |acc, x| acc + x)
}

/// Set partitions of `0..n` as block labels in restricted-growth form.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|labels: Vec<usize>| {
                let fresh = labels.iter().max().map_or(0, |m| m + 1);
                (0..=fresh).map(move |l| {
                    let mut labels = labels.clone();
                    labels.push(l);
                    labels
                })
            })
            .collect();
    }
    out
}

/// A partition into aromatic trees, found by brute force.
#[derive(Debug, Clone)]
pub struct BrutePartition {
    pub blocks: Vec<AromaticForest>,
    /// The labelled quotient graph on block indices.
    pub quotient: Succ,
    pub skeleton: AromaticForest,
}

/// Every pair (set of cut edges, set partition of the vertices) in which
/// each block is a union of kept components with exactly one root.
pub fn brute_partitions(phi: &AromaticForest) -> Vec<BrutePartition> {
    let succ = phi.successors();
    let n = succ.len();
    let edges: Vec<usize> = (0..n).filter(|&v| succ[v].is_some()).collect();
    let mut out = Vec::new();
    for cut_mask in 0u32..(1 << edges.len()) {
        let mut kept = succ.to_vec();
        for (k, &v) in edges.iter().enumerate() {
            if cut_mask >> k & 1 == 1 {
                kept[v] = None;
            }
        }
        for labels in set_partitions(n) {
            let m = labels.iter().max().map_or(0, |x| x + 1);
            if (0..n).any(|v| kept[v].is_some_and(|t| labels[t] != labels[v])) {
                continue;
            }
            let mut roots = vec![0usize; m];
            for v in 0..n {
                if kept[v].is_none() {
                    roots[labels[v]] += 1;
                }
            }
            if roots.iter().any(|&r| r != 1) {
                continue;
            }
            let blocks = (0..m)
                .map(|blk| {
                    let keep: Vec<bool> = labels.iter().map(|&l| l == blk).collect();
                    AromaticForest::from_successors(&induced(&kept, &keep))
                })
                .collect();
            let mut quotient = vec![None; m];
            for (k, &v) in edges.iter().enumerate() {
                if cut_mask >> k & 1 == 1 {
                    quotient[labels[v]] = Some(labels[succ[v].expect("edge source")]);
                }
            }
            let skeleton = AromaticForest::from_successors(&quotient);
            out.push(BrutePartition {
                blocks,
                quotient,
                skeleton,
            });
        }
    }
    out
}

/// The substitution law at `φ` with symbolic coefficients.
pub fn brute_star_symbolic(phi: &AromaticForest) -> SymbolicPoly {
    let mut out = SymbolicPoly::default();
    for p in brute_partitions(phi) {
        let mut b = BTreeMap::new();
        for blk in p.blocks {
            *b.entry(blk).or_insert(0) += 1;
        }
        out.add(Monomial { a: p.skeleton, b }, 1);
    }
    out
}

/// `(b★a)(φ)` over brute-force partitions.
pub fn brute_star(
    b: &CoeffMap<Rational>,
    a: &CoeffMap<Rational>,
    phi: &AromaticForest,
) -> Rational {
    brute_partitions(phi)
        .into_iter()
        .map(|p| {
            p.blocks
                .iter()
                .fold(a.coeff(&p.skeleton), |acc, t| acc * b.coeff(t))
        })
        .fold(Rational::zero(), |acc, x| acc + x)
}

/// Children of each vertex.
fn children(succ: &[Option<usize>]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]; succ.len()];
    for (v, s) in succ.iter().enumerate() {
        if let Some(t) = s {
            out[*t].push(v);
        }
    }
    out
}

/// `F_f(φ)[G]` by looping over every index assignment of the vertices.
pub fn brute_apply(
    phi: &AromaticForest,
    f: &PolyVecField<Rational>,
    g: &PolyScalar<Rational>,
) -> PolyScalar<Rational> {
    brute_apply_graph(phi.successors(), f, g)
}

/// [`brute_apply`] on a labelled graph.
pub fn brute_apply_graph(
    succ: &[Option<usize>],
    f: &PolyVecField<Rational>,
    g: &PolyScalar<Rational>,
) -> PolyScalar<Rational> {
    let kids = children(succ);
    let n = succ.len();
    let dim = f.dim();
    let mut total = PolyScalar::zero(g.nvars());
    let mut index = vec![0usize; n];
    loop {
        let mut term = PolyScalar::one(g.nvars());
        for v in 0..n {
            let slots: Vec<usize> = kids[v].iter().map(|&c| index[c]).collect();
            term = term.mul(&f.component(index[v]).partials(&slots));
        }
        let root_slots: Vec<usize> = (0..n)
            .filter(|&v| succ[v].is_none())
            .map(|v| index[v])
            .collect();
        total = total.add(&term.mul(&g.partials(&root_slots)));
        let mut k = 0;
        while k < n {
            index[k] += 1;
            if index[k] < dim {
                break;
            }
            index[k] = 0;
            k += 1;
        }
        if k == n {
            return total;
        }
    }
}

/// Coefficient of `γ` in the product of the formal series
/// `Σ a(γ)/σ(γ) γ` and `Σ b(γ)/σ(γ) γ`, multiplying term by term.
pub fn literal_series_product(
    a: &CoeffMap<Rational>,
    b: &CoeffMap<Rational>,
    rootless: &[AromaticForest],
    order: usize,
) -> BTreeMap<AromaticForest, Rational> {
    let s = |phi: &AromaticForest| q(sigma(phi) as i64);
    let mut out: BTreeMap<AromaticForest, Rational> = BTreeMap::new();
    for x in rootless {
        for y in rootless {
            if x.size() + y.size() > order {
                continue;
            }
            let term = a.coeff(x) / s(x) * b.coeff(y) / s(y);
            let entry = out.entry(x.concat(y)).or_insert_with(Rational::zero);
            *entry += term;
        }
    }
    for (gamma, v) in out.iter_mut() {
        *v *= s(gamma);
    }
    out
}
