//! JSON form of a partition tree.
//!
//! ```json
//! {"format_version": "1", "n": 2, "node": {
//!   "cut": {"theta": 1.5707963267948966, "t": -1.0},
//!   "left": {"slice": [[0, 0], [1, 0], [1, 2], [0, 2]]},
//!   "right": {"slice": [[1, 0], [2, 0], [2, 2], [1, 2]]}
//! }}
//! ```
//!
//! `left` is the plus side of the cut (left of its direction), `right` the
//! minus side.

use std::path::Path;

use pizza_core::partition::PartitionTree;
use pizza_core::{ConvexPolygon, OrientedLine, Point2};
use serde::Serialize;
use serde_json::{Map, Value};

use crate::error::AppError;
use crate::{read_file, FORMAT_VERSION};

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum TreeNode {
    Cut {
        cut: LineRecord,
        left: Box<TreeNode>,
        right: Box<TreeNode>,
    },
    Slice {
        slice: Vec<Point2>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LineRecord {
    pub theta: f64,
    pub t: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TreeDocument {
    pub format_version: String,
    pub n: usize,
    pub node: TreeNode,
}

impl TreeNode {
    pub fn from_tree(tree: &PartitionTree) -> Self {
        match tree {
            PartitionTree::Cut { cut, left, right, .. } => TreeNode::Cut {
                cut: LineRecord {
                    theta: cut.theta(),
                    t: cut.t(),
                },
                left: Box::new(Self::from_tree(left)),
                right: Box::new(Self::from_tree(right)),
            },
            PartitionTree::Slice { slice } => TreeNode::Slice {
                slice: slice.vertices().to_vec(),
            },
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            TreeNode::Cut { left, right, .. } => left.leaf_count() + right.leaf_count(),
            TreeNode::Slice { .. } => 1,
        }
    }

    /// Rebuilds the core tree. Internal pieces are re-derived by clipping
    /// `dough` along the recorded cuts; slices keep their stored vertices.
    pub fn to_tree(&self, dough: &ConvexPolygon) -> Result<PartitionTree, AppError> {
        self.build(Some(dough.clone()), "node")
    }

    fn build(&self, piece: Option<ConvexPolygon>, path: &str) -> Result<PartitionTree, AppError> {
        match self {
            TreeNode::Slice { slice } => {
                let slice = ConvexPolygon::new(slice.clone())
                    .map_err(|e| AppError::InvalidInput(format!("{path}.slice: {e}")))?;
                Ok(PartitionTree::Slice { slice })
            }
            TreeNode::Cut { cut, left, right } => {
                let piece = piece
                    .ok_or_else(|| AppError::InvalidInput(format!("{path}: an earlier cut leaves this piece empty")))?;
                let line = OrientedLine::new(cut.theta, cut.t);
                let (plus, minus) = piece.split(&line);
                Ok(PartitionTree::Cut {
                    left: Box::new(left.build(plus, &format!("{path}.left"))?),
                    right: Box::new(right.build(minus, &format!("{path}.right"))?),
                    piece,
                    cut: line,
                })
            }
        }
    }

    fn parse(value: &Value, path: &str) -> Result<TreeNode, AppError> {
        let bad = |what: &str| AppError::InvalidInput(format!("{path}: {what}"));
        let obj = value.as_object().ok_or_else(|| bad("expected an object"))?;
        if let Some(slice) = obj.get("slice") {
            if obj.len() != 1 {
                return Err(bad("a slice node has only the key \"slice\""));
            }
            let slice = serde_json::from_value(slice.clone())
                .map_err(|e| bad(&format!("slice must be a list of [x, y] pairs ({e})")))?;
            return Ok(TreeNode::Slice { slice });
        }
        let field = |key: &str| {
            obj.get(key).ok_or_else(|| bad(&format!("missing \"{key}\"; a node is either {{\"slice\": ...}} or {{\"cut\": ..., \"left\": ..., \"right\": ...}}")))
        };
        let cut = field("cut")?;
        let number = |key: &str| {
            cut.get(key)
                .and_then(Value::as_f64)
                .ok_or_else(|| bad(&format!("cut.{key} must be a number")))
        };
        let cut = LineRecord {
            theta: number("theta")?,
            t: number("t")?,
        };
        if obj.len() != 3 {
            return Err(bad("a cut node has exactly the keys \"cut\", \"left\" and \"right\""));
        }
        Ok(TreeNode::Cut {
            cut,
            left: Box::new(Self::parse(field("left")?, &format!("{path}.left"))?),
            right: Box::new(Self::parse(field("right")?, &format!("{path}.right"))?),
        })
    }
}

impl TreeDocument {
    pub fn new(tree: &PartitionTree) -> Self {
        TreeDocument {
            format_version: FORMAT_VERSION.to_string(),
            n: tree.leaf_count(),
            node: TreeNode::from_tree(tree),
        }
    }

    pub fn to_json(&self) -> String {
        crate::to_json(self)
    }

    /// Accepts a full document or a bare root node.
    pub fn from_json(text: &str) -> Result<Self, AppError> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| AppError::InvalidInput(format!("tree is not valid JSON ({e})")))?;
        let empty = Map::new();
        let obj = value.as_object().unwrap_or(&empty);
        let (node, declared) = match obj.get("format_version") {
            Some(version) => {
                if version.as_str() != Some(FORMAT_VERSION) {
                    return Err(AppError::InvalidInput(format!(
                        "unsupported tree format_version {version}; this build reads \"{FORMAT_VERSION}\""
                    )));
                }
                let node = obj
                    .get("node")
                    .ok_or_else(|| AppError::InvalidInput("tree document has no \"node\"".into()))?;
                (node, obj.get("n").and_then(Value::as_u64))
            }
            None => (&value, None),
        };
        let node = TreeNode::parse(node, "node")?;
        let n = node.leaf_count();
        if let Some(declared) = declared {
            if declared != n as u64 {
                return Err(AppError::InvalidInput(format!(
                    "tree declares n = {declared} but has {n} slices"
                )));
            }
        }
        Ok(TreeDocument {
            format_version: FORMAT_VERSION.to_string(),
            n,
            node,
        })
    }

    pub fn load(path: &Path) -> Result<Self, AppError> {
        Self::from_json(&read_file(path)?).map_err(|e| match e {
            AppError::InvalidInput(msg) => AppError::InvalidInput(format!("{}: {msg}", path.display())),
            other => other,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const HALVES: &str = r#"{"format_version": "1", "n": 2, "node": {
        "cut": {"theta": 1.5707963267948966, "t": -1.0},
        "left": {"slice": [[0, 0], [1, 0], [1, 2], [0, 2]]},
        "right": {"slice": [[1, 0], [2, 0], [2, 2], [1, 2]]}
    }}"#;

    fn square() -> ConvexPolygon {
        ConvexPolygon::rectangle(Point2::ORIGIN, Point2::new(2.0, 2.0)).unwrap()
    }

    #[test]
    fn parses_and_rebuilds() {
        let doc = TreeDocument::from_json(HALVES).unwrap();
        assert_eq!(doc.n, 2);
        let tree = doc.node.to_tree(&square()).unwrap();
        assert_eq!(tree.leaf_count(), 2);
        assert_eq!(TreeNode::from_tree(&tree), doc.node);
    }

    #[test]
    fn bare_node_is_accepted() {
        let value: Value = serde_json::from_str(HALVES).unwrap();
        let doc = TreeDocument::from_json(&value["node"].to_string()).unwrap();
        assert_eq!(doc.n, 2);
    }

    #[test]
    fn errors_name_the_path() {
        let text = HALVES.replace("\"right\": {\"slice\"", "\"right\": {\"slices\"");
        let err = TreeDocument::from_json(&text).unwrap_err().to_string();
        assert!(err.contains("node.right"), "{err}");
        let text = HALVES.replace("\"n\": 2", "\"n\": 3");
        assert!(TreeDocument::from_json(&text).is_err());
    }
}
