//! Text grammar and structural canonicalization.
//!
//! ```text
//! forest    := "1" | component (" " component)*
//! component := tree | cycle
//! tree      := "b" | "b[" tree ("," tree)* "]"
//! cycle     := "<" tree ("," tree)* ">"
//! ```
//!
//! Children of a node are its direct predecessors. In a cycle the root of tree
//! `i` has an edge into the root of tree `i + 1`, and the last into the first.

use crate::error::{Error, Result};

/// Successor array: `succ[v]` is the head of the unique edge leaving `v`.
pub(crate) type Successors = Vec<Option<usize>>;

pub(crate) fn parse(text: &str) -> Result<Successors> {
    let mut parser = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        succ: Vec::new(),
    };
    if text == "1" {
        return Ok(Vec::new());
    }
    if text.is_empty() {
        return Err(parser.error("empty input; the empty forest is written \"1\""));
    }
    loop {
        parser.component()?;
        match parser.peek() {
            None => break,
            Some(b' ') => {
                parser.pos += 1;
            }
            Some(_) => return Err(parser.error("expected ' ' between components or end of input")),
        }
    }
    Ok(parser.succ)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    succ: Successors,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn error(&self, message: &str) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", byte as char)))
        }
    }

    fn component(&mut self) -> Result<()> {
        match self.peek() {
            Some(b'b') => self.tree().map(|_| ()),
            Some(b'<') => self.cycle(),
            _ => Err(self.error("expected 'b' or '<'")),
        }
    }

    fn tree(&mut self) -> Result<usize> {
        self.expect(b'b')?;
        let root = self.succ.len();
        self.succ.push(None);
        if self.peek() == Some(b'[') {
            self.pos += 1;
            loop {
                let child = self.tree()?;
                self.succ[child] = Some(root);
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b']') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.error("expected ',' or ']'")),
                }
            }
        }
        Ok(root)
    }

    fn cycle(&mut self) -> Result<()> {
        self.expect(b'<')?;
        let mut roots = Vec::new();
        loop {
            roots.push(self.tree()?);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b'>') => {
                    self.pos += 1;
                    break;
                }
                _ => return Err(self.error("expected ',' or '>'")),
            }
        }
        for (i, &r) in roots.iter().enumerate() {
            self.succ[r] = Some(roots[(i + 1) % roots.len()]);
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub(crate) enum Component {
    Tree(usize),
    /// Cycle vertices in edge order: `cycle[i] -> cycle[i + 1]`.
    Cycle(Vec<usize>),
}

/// Decomposition of an out-degree-one graph into trees hung on cycles.
pub(crate) struct Structure {
    preds: Vec<Vec<usize>>,
    cycle_pred: Vec<Option<usize>>,
    texts: Vec<Option<String>>,
    pub(crate) components: Vec<Component>,
}

impl Structure {
    pub(crate) fn new(succ: &[Option<usize>]) -> Self {
        let n = succ.len();
        let mut preds = vec![Vec::new(); n];
        for (v, s) in succ.iter().enumerate() {
            if let Some(p) = *s {
                preds[p].push(v);
            }
        }
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        let mut cycle_pred = vec![None; n];

        let mark = |start: &[usize], seen: &mut Vec<bool>| {
            let mut stack = start.to_vec();
            while let Some(v) = stack.pop() {
                if seen[v] {
                    continue;
                }
                seen[v] = true;
                stack.extend(preds[v].iter().copied().filter(|&u| !seen[u]));
            }
        };

        for (v, s) in succ.iter().enumerate() {
            if s.is_none() {
                components.push(Component::Tree(v));
                mark(&[v], &mut seen);
            }
        }
        for v in 0..n {
            if seen[v] {
                continue;
            }
            // Every vertex not draining into a root drains into a unique cycle.
            let mut on_path = vec![usize::MAX; n];
            let mut path = Vec::new();
            let mut u = v;
            while on_path[u] == usize::MAX {
                on_path[u] = path.len();
                path.push(u);
                u = succ[u].expect("rootless component has no sinks");
            }
            let cycle = path[on_path[u]..].to_vec();
            for (i, &c) in cycle.iter().enumerate() {
                cycle_pred[c] = Some(cycle[(i + cycle.len() - 1) % cycle.len()]);
            }
            mark(&cycle, &mut seen);
            components.push(Component::Cycle(cycle));
        }

        Structure {
            preds,
            cycle_pred,
            texts: vec![None; n],
            components,
        }
    }

    /// Tree-children of `v`: its predecessors, minus the cycle edge if `v` lies on one.
    pub(crate) fn children(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let skip = self.cycle_pred[v];
        self.preds[v]
            .iter()
            .copied()
            .filter(move |&u| Some(u) != skip)
    }

    pub(crate) fn tree_text(&mut self, v: usize) -> String {
        if let Some(t) = &self.texts[v] {
            return t.clone();
        }
        let kids: Vec<usize> = self.children(v).collect();
        let mut parts: Vec<String> = kids.into_iter().map(|c| self.tree_text(c)).collect();
        let text = if parts.is_empty() {
            "b".to_string()
        } else {
            parts.sort();
            format!("b[{}]", parts.join(","))
        };
        self.texts[v] = Some(text.clone());
        text
    }

    pub(crate) fn cycle_trees(&mut self, cycle: &[usize]) -> Vec<String> {
        cycle.iter().map(|&c| self.tree_text(c)).collect()
    }

    pub(crate) fn component_text(&mut self, component: &Component) -> String {
        match component {
            Component::Tree(r) => self.tree_text(*r),
            Component::Cycle(cycle) => cycle_text(&self.cycle_trees(cycle)),
        }
    }

    pub(crate) fn canonical_text(&mut self) -> String {
        let components = self.components.clone();
        let mut parts: Vec<String> = components.iter().map(|c| self.component_text(c)).collect();
        if parts.is_empty() {
            return "1".to_string();
        }
        parts.sort();
        parts.join(" ")
    }
}

/// Lexicographically minimal rotation of a cycle of tree texts.
pub(crate) fn cycle_text(trees: &[String]) -> String {
    (0..trees.len())
        .map(|r| {
            let rotated: Vec<&str> = trees[r..]
                .iter()
                .chain(&trees[..r])
                .map(String::as_str)
                .collect();
            format!("<{}>", rotated.join(","))
        })
        .min()
        .expect("cycle has at least one vertex")
}

pub(crate) fn canonical_text(succ: &[Option<usize>]) -> String {
    Structure::new(succ).canonical_text()
}
