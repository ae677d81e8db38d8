//! Portraits: automorphisms of the depth-n truncated 5-ary rooted tree,
//! given by one degree-5 permutation per internal vertex.
//!
//! Conventions (fixed once, used by serialization and all checks):
//! leaves are ordered lexicographically by their vertex strings, so the leaf
//! `w1 w2 .. wn` maps to `sum (wi - 1) * 5^(n-i) + 1`; the subtree hanging at
//! a vertex is the section there, i.e. the image of the leaf `x w` under a
//! portrait with root label `s` is `(x)s` followed by the image of `w` under
//! the subtree at `x`.

use rand::Rng;
use serde_json::{json, Value};
use thiserror::Error;

use crate::permkernel::Perm;

pub const ARITY: usize = 5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("depth mismatch: {0} vs {1}")]
    DepthMismatch(usize, usize),
    #[error("depth must be at least 1")]
    ZeroDepth,
    #[error("label must be a permutation of degree 5, got degree {0}")]
    BadLabelDegree(usize),
    #[error("vertex path entry {0} out of range 1..=5")]
    BadVertex(usize),
    #[error("vertex path of length {0} exceeds portrait depth {1}")]
    PathTooDeep(usize, usize),
    #[error("cannot project depth-{1} portrait to level {0}")]
    BadProjection(usize, usize),
    #[error("permutation {0} is not in Alt(5)")]
    NotInAlt5(Perm),
    #[error("sequences agree at every usable index (indistinguishable prefix)")]
    IndistinguishablePrefix,
    #[error("invalid portrait JSON: {0}")]
    BadJson(String),
    #[error(transparent)]
    Perm(#[from] crate::permkernel::PermError),
    #[error(transparent)]
    Lambda(#[from] crate::lambda::LambdaError),
}

/// An automorphism of the truncated tree. `Leaf` is the (unique) portrait of
/// depth 0; a `Node` carries the local permutation of its five subtrees and
/// the five sections.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Portrait {
    Leaf,
    Node { label: Perm, children: Vec<Portrait> },
}

impl Portrait {
    pub fn identity(depth: usize) -> Portrait {
        if depth == 0 {
            Portrait::Leaf
        } else {
            Portrait::Node {
                label: Perm::identity(ARITY),
                children: (0..ARITY).map(|_| Portrait::identity(depth - 1)).collect(),
            }
        }
    }

    /// Rooted automorphism: permutes the five principal subtrees bodily.
    pub fn rooted(sigma: &Perm, depth: usize) -> Result<Portrait, TreeError> {
        if depth == 0 {
            return Err(TreeError::ZeroDepth);
        }
        if sigma.degree() != ARITY {
            return Err(TreeError::BadLabelDegree(sigma.degree()));
        }
        Ok(Portrait::Node {
            label: sigma.clone(),
            children: (0..ARITY).map(|_| Portrait::identity(depth - 1)).collect(),
        })
    }

    /// Directed (spinal) automorphism for the sequence `seq(1), seq(2), ...`:
    /// it stabilizes level 1; its section at vertex 1 is the directed
    /// automorphism of the shifted sequence, its section at vertex 2 is the
    /// rooted automorphism of `seq(1)`, and the other sections are trivial.
    pub fn directed<F>(seq: &F, depth: usize) -> Result<Portrait, TreeError>
    where
        F: Fn(usize) -> Perm,
    {
        if depth == 0 {
            return Err(TreeError::ZeroDepth);
        }
        Self::directed_at(seq, 1, depth)
    }

    fn directed_at<F>(seq: &F, offset: usize, depth: usize) -> Result<Portrait, TreeError>
    where
        F: Fn(usize) -> Perm,
    {
        if depth == 1 {
            return Ok(Portrait::identity(1));
        }
        let entry = seq(offset);
        if entry.degree() != ARITY {
            return Err(TreeError::BadLabelDegree(entry.degree()));
        }
        let children = vec![
            Self::directed_at(seq, offset + 1, depth - 1)?,
            Portrait::rooted(&entry, depth - 1)?,
            Portrait::identity(depth - 1),
            Portrait::identity(depth - 1),
            Portrait::identity(depth - 1),
        ];
        Ok(Portrait::Node {
            label: Perm::identity(ARITY),
            children,
        })
    }

    /// Portrait with a single nontrivial label at the given vertex.
    pub fn single_label(path: &[usize], sigma: &Perm, depth: usize) -> Result<Portrait, TreeError> {
        if sigma.degree() != ARITY {
            return Err(TreeError::BadLabelDegree(sigma.degree()));
        }
        if path.len() >= depth {
            return Err(TreeError::PathTooDeep(path.len(), depth));
        }
        match path.split_first() {
            None => Portrait::rooted(sigma, depth),
            Some((&first, rest)) => {
                if first < 1 || first > ARITY {
                    return Err(TreeError::BadVertex(first));
                }
                let mut children: Vec<Portrait> =
                    (0..ARITY).map(|_| Portrait::identity(depth - 1)).collect();
                children[first - 1] = Portrait::single_label(rest, sigma, depth - 1)?;
                Ok(Portrait::Node {
                    label: Perm::identity(ARITY),
                    children,
                })
            }
        }
    }

    /// Uniformly random labels drawn from `labels` at every internal vertex.
    pub fn random<R: Rng>(depth: usize, labels: &[Perm], rng: &mut R) -> Portrait {
        if depth == 0 {
            return Portrait::Leaf;
        }
        let label = labels[rng.gen_range(0..labels.len())].clone();
        Portrait::Node {
            label,
            children: (0..ARITY)
                .map(|_| Portrait::random(depth - 1, labels, rng))
                .collect(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Portrait::Leaf => 0,
            Portrait::Node { children, .. } => 1 + children[0].depth(),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Portrait::Leaf => true,
            Portrait::Node { label, children } => {
                label.is_identity() && children.iter().all(|c| c.is_identity())
            }
        }
    }

    /// True iff all sections at level 1 are trivial (only the root label may
    /// be nontrivial).
    pub fn is_rooted(&self) -> bool {
        match self {
            Portrait::Leaf => false,
            Portrait::Node { children, .. } => children.iter().all(|c| c.is_identity()),
        }
    }

    pub fn root_label(&self) -> Option<&Perm> {
        match self {
            Portrait::Leaf => None,
            Portrait::Node { label, .. } => Some(label),
        }
    }

    /// `compose(p, q)` applies `p` first, then `q`, matching `Perm::compose`.
    pub fn compose(&self, other: &Portrait) -> Result<Portrait, TreeError> {
        match (self, other) {
            (Portrait::Leaf, Portrait::Leaf) => Ok(Portrait::Leaf),
            (
                Portrait::Node { label: pl, children: pc },
                Portrait::Node { label: ql, children: qc },
            ) => {
                let label = pl.compose(ql)?;
                let children = (0..ARITY)
                    .map(|x| {
                        let qx = pl.image(x + 1).expect("degree 5") - 1;
                        pc[x].compose(&qc[qx])
                    })
                    .collect::<Result<_, _>>()?;
                Ok(Portrait::Node { label, children })
            }
            _ => Err(TreeError::DepthMismatch(self.depth(), other.depth())),
        }
    }

    pub fn inverse(&self) -> Portrait {
        match self {
            Portrait::Leaf => Portrait::Leaf,
            Portrait::Node { label, children } => {
                let inv = label.inverse();
                let new_children = (0..ARITY)
                    .map(|x| {
                        let src = inv.image(x + 1).expect("degree 5") - 1;
                        children[src].inverse()
                    })
                    .collect();
                Portrait::Node {
                    label: inv,
                    children: new_children,
                }
            }
        }
    }

    pub fn pow(&self, e: u64) -> Portrait {
        let mut acc = Portrait::identity(self.depth());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base).expect("equal depths");
            }
            base = base.compose(&base).expect("equal depths");
            e >>= 1;
        }
        acc
    }

    /// Section (subtree) at the given vertex; path entries are 1-based.
    pub fn section(&self, path: &[usize]) -> Result<Portrait, TreeError> {
        match path.split_first() {
            None => Ok(self.clone()),
            Some((&first, rest)) => {
                if first < 1 || first > ARITY {
                    return Err(TreeError::BadVertex(first));
                }
                match self {
                    Portrait::Leaf => Err(TreeError::PathTooDeep(path.len(), 0)),
                    Portrait::Node { children, .. } => children[first - 1].section(rest),
                }
            }
        }
    }

    /// Truncate to the action on the first `n` levels.
    pub fn project(&self, n: usize) -> Result<Portrait, TreeError> {
        if n == 0 {
            return Ok(Portrait::Leaf);
        }
        match self {
            Portrait::Leaf => Err(TreeError::BadProjection(n, 0)),
            Portrait::Node { label, children } => {
                let children = children
                    .iter()
                    .map(|c| c.project(n - 1))
                    .collect::<Result<_, _>>()?;
                Ok(Portrait::Node {
                    label: label.clone(),
                    children,
                })
            }
        }
    }

    /// True iff the portrait acts trivially on the first `n` levels.
    pub fn fixes_levels(&self, n: usize) -> Result<bool, TreeError> {
        Ok(self.project(n)?.is_identity())
    }

    /// The induced permutation of the 5^depth leaves.
    pub fn to_perm(&self) -> Perm {
        match self {
            Portrait::Leaf => Perm::identity(1),
            Portrait::Node { label, children } => {
                let sub: Vec<Perm> = children.iter().map(|c| c.to_perm()).collect();
                let m = sub[0].degree();
                let mut images = vec![0u32; ARITY * m];
                for x in 0..ARITY {
                    let xi = label.image(x + 1).expect("degree 5") - 1;
                    for r in 0..m {
                        images[x * m + r] = (xi * m) as u32 + sub[x].image0(r as u32);
                    }
                }
                Perm::from_images0(images)
            }
        }
    }

    /// Nested-array JSON: `{"label": "(1 2 3)", "children": [...]}` per
    /// internal vertex; the depth-0 portrait is `null`.
    pub fn to_json(&self) -> Value {
        match self {
            Portrait::Leaf => Value::Null,
            Portrait::Node { label, children } => json!({
                "label": label.to_string(),
                "children": children.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
            }),
        }
    }

    pub fn from_json(value: &Value) -> Result<Portrait, TreeError> {
        match value {
            Value::Null => Ok(Portrait::Leaf),
            Value::Object(map) => {
                let label_text = map
                    .get("label")
                    .and_then(|v| v.as_str())
                    .ok_or_else(|| TreeError::BadJson("missing string field 'label'".into()))?;
                let label = Perm::parse_cycles(ARITY, label_text)?;
                let raw = map
                    .get("children")
                    .and_then(|v| v.as_array())
                    .ok_or_else(|| TreeError::BadJson("missing array field 'children'".into()))?;
                if raw.len() != ARITY {
                    return Err(TreeError::BadJson(format!(
                        "expected {ARITY} children, got {}",
                        raw.len()
                    )));
                }
                let children: Vec<Portrait> = raw
                    .iter()
                    .map(Portrait::from_json)
                    .collect::<Result<_, _>>()?;
                let d = children[0].depth();
                if children.iter().any(|c| c.depth() != d) {
                    return Err(TreeError::BadJson("children of unequal depth".into()));
                }
                Ok(Portrait::Node { label, children })
            }
            _ => Err(TreeError::BadJson("expected object or null".into())),
        }
    }
}
