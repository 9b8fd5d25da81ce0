//! Generation of all canonical forests of a given size.

use super::text::cycle_text;
use super::{AromaticForest, ForestFilter};
use crate::memo::Memo;
use std::collections::BTreeSet;
use std::sync::LazyLock;

static FORESTS: LazyLock<Memo<(usize, ForestFilter), Vec<AromaticForest>>> =
    LazyLock::new(Memo::new);
static TREES: LazyLock<Memo<usize, Vec<String>>> = LazyLock::new(Memo::new);
static AROMAS: LazyLock<Memo<usize, Vec<String>>> = LazyLock::new(Memo::new);

/// All canonical forests with exactly `n` vertices in the given class,
/// sorted by canonical text.
pub fn enumerate(n: usize, filter: ForestFilter) -> Vec<AromaticForest> {
    FORESTS
        .get_or_insert_with(&(n, filter), || generate(n, filter))
        .to_vec()
}

/// All forests with at most `max_size` vertices, by size and then text.
pub fn enumerate_up_to(max_size: usize, filter: ForestFilter) -> Vec<AromaticForest> {
    (0..=max_size).flat_map(|n| enumerate(n, filter)).collect()
}

fn generate(n: usize, filter: ForestFilter) -> Vec<AromaticForest> {
    let texts: Vec<String> = match filter {
        ForestFilter::RootedTrees => trees(n),
        ForestFilter::ConnectedRootless => aromas(n),
        ForestFilter::Rootless => multisets(n, &|k| aromas(k)),
        ForestFilter::Loopless => multisets(n, &|k| trees(k)),
        ForestFilter::All => multisets(n, &|k| {
            let mut c = trees(k);
            c.extend(aromas(k));
            c
        }),
        ForestFilter::AromaticTrees => {
            let mut out = Vec::new();
            for k in 1..=n {
                for t in trees(k) {
                    for g in multisets(n - k, &|j| aromas(j)) {
                        out.push(join_components(vec![t.clone(), g]));
                    }
                }
            }
            out
        }
    };
    let mut forests: Vec<AromaticForest> = texts
        .into_iter()
        .map(|t| AromaticForest::parse(&t).expect("generated forest text is valid"))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    forests.sort();
    forests
}

fn join_components(parts: Vec<String>) -> String {
    let mut parts: Vec<String> = parts.into_iter().filter(|p| p != "1").collect();
    if parts.is_empty() {
        return "1".into();
    }
    parts.sort();
    parts.join(" ")
}

/// Canonical texts of rooted trees with `n` vertices.
fn trees(n: usize) -> Vec<String> {
    TREES
        .get_or_insert_with(&n, || {
            if n == 0 {
                return Vec::new();
            }
            let items = catalog(n - 1, &|k| trees(k));
            let mut out = BTreeSet::new();
            for children in multiset_choices(&items, n - 1, 0) {
                let mut kids: Vec<&str> = children.iter().map(|&i| items[i].1.as_str()).collect();
                kids.sort();
                out.insert(if kids.is_empty() {
                    "b".to_string()
                } else {
                    format!("b[{}]", kids.join(","))
                });
            }
            out.into_iter().collect()
        })
        .to_vec()
}

/// Canonical texts of connected rootless components with `n` vertices.
fn aromas(n: usize) -> Vec<String> {
    AROMAS
        .get_or_insert_with(&n, || {
            let mut out = BTreeSet::new();
            let mut seq = Vec::new();
            cycles(n, &mut seq, &mut out);
            out.into_iter().collect()
        })
        .to_vec()
}

fn cycles(remaining: usize, seq: &mut Vec<String>, out: &mut BTreeSet<String>) {
    if remaining == 0 {
        if !seq.is_empty() {
            out.insert(cycle_text(seq));
        }
        return;
    }
    for k in 1..=remaining {
        for t in trees(k) {
            seq.push(t);
            cycles(remaining - k, seq, out);
            seq.pop();
        }
    }
}

/// Items of sizes `1..=max` as `(size, text)`.
fn catalog(max: usize, items_of: &dyn Fn(usize) -> Vec<String>) -> Vec<(usize, String)> {
    (1..=max)
        .flat_map(|k| items_of(k).into_iter().map(move |t| (k, t)))
        .collect()
}

/// Index multisets (non-decreasing index sequences) with total size `target`.
fn multiset_choices(items: &[(usize, String)], target: usize, start: usize) -> Vec<Vec<usize>> {
    if target == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in start..items.len() {
        let size = items[i].0;
        if size > target {
            continue;
        }
        for mut rest in multiset_choices(items, target - size, i) {
            rest.insert(0, i);
            out.push(rest);
        }
    }
    out
}

/// Forest texts built from multisets of components drawn from `items_of`.
fn multisets(n: usize, items_of: &dyn Fn(usize) -> Vec<String>) -> Vec<String> {
    let items = catalog(n, items_of);
    multiset_choices(&items, n, 0)
        .into_iter()
        .map(|choice| join_components(choice.into_iter().map(|i| items[i].1.clone()).collect()))
        .collect()
}
