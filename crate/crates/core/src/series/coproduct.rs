//! Admissible partitions, the coproduct and the grafting composition of forests.

use super::sums::{FormalSum, TensorSum};
use crate::error::{Error, Result};
use crate::forest::AromaticForest;
use crate::memo::Memo;
use std::sync::LazyLock;

static COPRODUCTS: LazyLock<Memo<AromaticForest, TensorSum>> = LazyLock::new(Memo::new);

/// Vertex groups ordered so that the group containing `succ(v)` precedes the
/// group of `v`. A cycle forms a single group.
fn closure_groups(succ: &[Option<usize>]) -> (Vec<Vec<usize>>, Vec<Option<usize>>) {
    let n = succ.len();
    let mut group_of = vec![usize::MAX; n];
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut parent: Vec<Option<usize>> = Vec::new();
    // Cycles first.
    for start in 0..n {
        if group_of[start] != usize::MAX {
            continue;
        }
        let mut path = Vec::new();
        let mut pos = vec![usize::MAX; n];
        let mut u = start;
        loop {
            if group_of[u] != usize::MAX {
                break;
            }
            if pos[u] != usize::MAX {
                let cycle = path[pos[u]..].to_vec();
                for &c in &cycle {
                    group_of[c] = groups.len();
                }
                groups.push(cycle);
                parent.push(None);
                break;
            }
            pos[u] = path.len();
            path.push(u);
            match succ[u] {
                Some(h) => u = h,
                None => break,
            }
        }
    }
    // Remaining vertices, each after its successor.
    fn place(
        v: usize,
        succ: &[Option<usize>],
        group_of: &mut [usize],
        groups: &mut Vec<Vec<usize>>,
        parent: &mut Vec<Option<usize>>,
    ) {
        if group_of[v] != usize::MAX {
            return;
        }
        let p = succ[v].map(|h| {
            place(h, succ, group_of, groups, parent);
            group_of[h]
        });
        group_of[v] = groups.len();
        groups.push(vec![v]);
        parent.push(p);
    }
    for v in 0..n {
        place(v, succ, &mut group_of, &mut groups, &mut parent);
    }
    (groups, parent)
}

/// All vertex subsets closed under taking successors, as membership masks.
fn closed_subsets(succ: &[Option<usize>]) -> Vec<Vec<bool>> {
    let (groups, parent) = closure_groups(succ);
    let mut out = Vec::new();
    let mut chosen = vec![false; groups.len()];
    let mut mask = vec![false; succ.len()];
    fn rec(
        g: usize,
        groups: &[Vec<usize>],
        parent: &[Option<usize>],
        chosen: &mut [bool],
        mask: &mut [bool],
        out: &mut Vec<Vec<bool>>,
    ) {
        if g == groups.len() {
            out.push(mask.to_vec());
            return;
        }
        rec(g + 1, groups, parent, chosen, mask, out);
        if parent[g].is_none_or(|p| chosen[p]) {
            chosen[g] = true;
            for &v in &groups[g] {
                mask[v] = true;
            }
            rec(g + 1, groups, parent, chosen, mask, out);
            chosen[g] = false;
            for &v in &groups[g] {
                mask[v] = false;
            }
        }
    }
    rec(0, &groups, &parent, &mut chosen, &mut mask, &mut out);
    out
}

/// One `(P*, R)` pair per vertex subset `R` with no edge leaving it.
pub fn admissible_partitions(phi: &AromaticForest) -> Vec<(AromaticForest, AromaticForest)> {
    closed_subsets(phi.successors())
        .into_iter()
        .map(|mask| {
            let rest: Vec<bool> = mask.iter().map(|&m| !m).collect();
            (phi.induced(&rest), phi.induced(&mask))
        })
        .collect()
}

/// `Δ(φ) = Σ P* ⊗ R` with aggregated multiplicities.
pub fn coproduct(phi: &AromaticForest) -> TensorSum {
    COPRODUCTS
        .get_or_insert_with(phi, || {
            let mut out = TensorSum::new();
            for (p, r) in admissible_partitions(phi) {
                out.add(p, r, 1);
            }
            out
        })
        .as_ref()
        .clone()
}

/// The coproduct without the terms `1⊗φ` and `φ⊗1`.
pub fn reduced_coproduct(phi: &AromaticForest) -> Result<TensorSum> {
    if phi.is_unit() {
        return Err(Error::Invalid(
            "the reduced coproduct is not defined on the empty forest".into(),
        ));
    }
    let mut out = coproduct(phi);
    let unit = AromaticForest::unit();
    out.remove(&unit, phi, 1)?;
    out.remove(phi, &unit, 1)?;
    Ok(out)
}

/// Sum over all ways of attaching each root of `outer` to a vertex of
/// `inner` or leaving it a root. The result has
/// `(|inner| + 1)^roots(outer)` terms counted with multiplicity.
pub fn graph_composition(outer: &AromaticForest, inner: &AromaticForest) -> FormalSum {
    let offset = outer.size();
    let roots: Vec<usize> = outer.roots().collect();
    let mut succ: Vec<Option<usize>> = outer
        .successors()
        .iter()
        .copied()
        .chain(inner.successors().iter().map(|s| s.map(|h| h + offset)))
        .collect();
    let mut out = FormalSum::new();
    let choices = inner.size() + 1;
    let mut assignment = vec![0usize; roots.len()];
    loop {
        for (&r, &c) in roots.iter().zip(&assignment) {
            succ[r] = (c > 0).then(|| offset + c - 1);
        }
        out.add(AromaticForest::from_successors(&succ), 1);
        // Odometer increment over (inner vertices + unattached)^roots.
        let mut i = 0;
        while i < assignment.len() {
            assignment[i] += 1;
            if assignment[i] < choices {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
        if i == assignment.len() {
            break;
        }
    }
    out
}

/// The coproduct of the tensor product of the aroma algebra with the
/// loopless forest algebra: aromas split as whole components, the loopless
/// part by cuts. It agrees with [`coproduct`] only on some forests.
pub fn inherited_coproduct(phi: &AromaticForest) -> TensorSum {
    let (gamma, trees) = phi.split_aromas();
    let loopless = AromaticForest::product(&trees);
    super::aroma::aroma_coproduct(&gamma).product(&coproduct(&loopless))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> AromaticForest {
        s.parse().unwrap()
    }

    #[test]
    fn partitions_examples() {
        let texts = |s: &str| -> Vec<(String, String)> {
            let mut v: Vec<_> = admissible_partitions(&f(s))
                .into_iter()
                .map(|(p, r)| (p.render(), r.render()))
                .collect();
            v.sort();
            v
        };
        let pair = |a: &str, b: &str| (a.to_string(), b.to_string());
        assert_eq!(texts("b"), [pair("1", "b"), pair("b", "1")]);
        assert_eq!(
            texts("b[b]"),
            [pair("1", "b[b]"), pair("b", "b"), pair("b[b]", "1")]
        );
        assert_eq!(texts("<b>"), [pair("1", "<b>"), pair("<b>", "1")]);
        assert_eq!(texts("1"), [pair("1", "1")]);
    }

    #[test]
    fn closed_subsets_match_brute_force() {
        for s in ["b[b[b],b]", "<b[b],b> b[b]", "<b> <b,b[b[b]]>", "b b b"] {
            let phi = f(s);
            let succ = phi.successors();
            let n = succ.len();
            let brute = (0u32..1 << n)
                .filter(|m| {
                    (0..n).all(|v| m & (1 << v) == 0 || succ[v].is_none_or(|h| m & (1 << h) != 0))
                })
                .count();
            assert_eq!(closed_subsets(succ).len(), brute, "{s}");
        }
    }

    #[test]
    fn coproduct_examples() {
        assert_eq!(
            coproduct(&f("b[b,b]")).to_string(),
            "1*(1|b[b,b]) + 2*(b|b[b]) + 1*(b b|b) + 1*(b[b,b]|1)"
        );
        assert_eq!(
            coproduct(&f("<b[b]>")).to_string(),
            "1*(1|<b[b]>) + 1*(<b[b]>|1) + 1*(b|<b>)"
        );
        assert_eq!(coproduct(&f("1")).to_string(), "1*(1|1)");
    }

    #[test]
    fn reduced_coproduct_examples() {
        assert!(reduced_coproduct(&f("b")).unwrap().is_empty());
        assert_eq!(
            reduced_coproduct(&f("b[b]")).unwrap().to_string(),
            "1*(b|b)"
        );
        assert!(reduced_coproduct(&f("<b,b>")).unwrap().is_empty());
        assert!(reduced_coproduct(&f("1")).is_err());
    }

    #[test]
    fn graph_composition_examples() {
        assert_eq!(graph_composition(&f("b"), &f("1")).to_string(), "1*(b)");
        assert_eq!(
            graph_composition(&f("b"), &f("b")).to_string(),
            "1*(b b) + 1*(b[b])"
        );
        assert_eq!(
            graph_composition(&f("<b>"), &f("b")).to_string(),
            "1*(<b> b)"
        );
        assert_eq!(graph_composition(&f("b b"), &f("b[b]")).total(), 9);
    }

    #[test]
    fn inherited_coproduct_differs_on_a_tailed_loop() {
        assert_eq!(inherited_coproduct(&f("<b> b")), coproduct(&f("<b> b")));
        let phi = f("<b[b]>");
        assert_ne!(inherited_coproduct(&phi), coproduct(&phi));
        assert_eq!(
            inherited_coproduct(&phi).to_string(),
            "1*(1|<b[b]>) + 1*(<b[b]>|1)"
        );
    }
}
