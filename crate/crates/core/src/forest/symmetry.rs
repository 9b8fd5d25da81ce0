//! Symmetry coefficients and automorphism groups.

use super::text::{Component, Structure};
use super::AromaticForest;
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// Largest forest for which [`automorphisms`] enumerates permutations.
pub const DEFAULT_AUTOMORPHISM_BOUND: usize = 10;

fn factorial(n: usize) -> u64 {
    (1..=n as u64).fold(1u64, |acc, k| {
        acc.checked_mul(k)
            .expect("symmetry coefficient overflows u64")
    })
}

fn mul(a: u64, b: u64) -> u64 {
    a.checked_mul(b)
        .expect("symmetry coefficient overflows u64")
}

/// Order of the automorphism group `σ(φ)`, computed structurally.
///
/// Identical sibling subtrees and identical components contribute factorials
/// of their multiplicities; a cycle contributes the number of rotations that
/// fix its sequence of attached trees.
pub fn sigma(phi: &AromaticForest) -> u64 {
    let mut s = Structure::new(phi.successors());
    let components = s.components.clone();
    let mut by_text: BTreeMap<String, (usize, u64)> = BTreeMap::new();
    for c in &components {
        let text = s.component_text(c);
        let sym = component_sigma(&mut s, c);
        by_text.entry(text).or_insert((0, sym)).0 += 1;
    }
    by_text.values().fold(1, |acc, &(mult, sym)| {
        mul(mul(acc, factorial(mult)), sym.pow(mult as u32))
    })
}

fn component_sigma(s: &mut Structure, c: &Component) -> u64 {
    match c {
        Component::Tree(r) => tree_sigma(s, *r),
        Component::Cycle(cycle) => {
            let trees = s.cycle_trees(cycle);
            let k = trees.len();
            let rotations = (0..k)
                .filter(|&r| (0..k).all(|i| trees[i] == trees[(i + r) % k]))
                .count() as u64;
            cycle
                .iter()
                .fold(rotations, |acc, &v| mul(acc, tree_sigma(s, v)))
        }
    }
}

fn tree_sigma(s: &mut Structure, v: usize) -> u64 {
    let kids: Vec<usize> = s.children(v).collect();
    let mut groups: BTreeMap<String, (usize, u64)> = BTreeMap::new();
    for k in kids {
        let text = s.tree_text(k);
        let sym = tree_sigma(s, k);
        groups.entry(text).or_insert((0, sym)).0 += 1;
    }
    groups.values().fold(1, |acc, &(mult, sym)| {
        mul(mul(acc, factorial(mult)), sym.pow(mult as u32))
    })
}

/// All automorphisms of the canonical graph, as vertex permutations.
/// Fails above [`DEFAULT_AUTOMORPHISM_BOUND`] vertices.
pub fn automorphisms(phi: &AromaticForest) -> Result<Vec<Vec<usize>>> {
    automorphisms_bounded(phi, DEFAULT_AUTOMORPHISM_BOUND)
}

/// Exhaustive backtracking search for permutations `g` with
/// `succ(g(v)) = g(succ(v))` for every vertex.
pub fn automorphisms_bounded(phi: &AromaticForest, bound: usize) -> Result<Vec<Vec<usize>>> {
    let n = phi.size();
    if n > bound {
        return Err(Error::SizeBound { size: n, bound });
    }
    let succ = phi.successors();
    let mut preds = vec![Vec::new(); n];
    for (v, s) in succ.iter().enumerate() {
        if let Some(h) = s {
            preds[*h].push(v);
        }
    }
    let mut found = Vec::new();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    search(0, succ, &preds, &mut image, &mut used, &mut found);
    Ok(found)
}

fn search(
    v: usize,
    succ: &[Option<usize>],
    preds: &[Vec<usize>],
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
    found: &mut Vec<Vec<usize>>,
) {
    let n = succ.len();
    if v == n {
        found.push(image.clone());
        return;
    }
    for w in 0..n {
        if used[w] || succ[v].is_some() != succ[w].is_some() || preds[v].len() != preds[w].len() {
            continue;
        }
        image[v] = w;
        let consistent = match succ[v] {
            Some(h) if h <= v => succ[w] == Some(image[h]),
            _ => true,
        } && preds[v]
            .iter()
            .filter(|&&u| u < v)
            .all(|&u| succ[image[u]] == Some(w));
        if consistent {
            used[w] = true;
            search(v + 1, succ, preds, image, used, found);
            used[w] = false;
        }
        image[v] = usize::MAX;
    }
}
