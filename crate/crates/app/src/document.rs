//! Pizza input files.
//!
//! ```json
//! {
//!   "format_version": "1",
//!   "topping": [[0.5, 0.5], [1.5, 0.5], [1.5, 1.5], [0.5, 1.5]],
//!   "dough": [[0, 0], [2, 0], [2, 2], [0, 2]],
//!   "metadata": {"name": "squares", "generator": "square_pair", "params": {"a": 1, "b": 2}}
//! }
//! ```
//!
//! Vertices are listed counterclockwise. Both bodies must be convex and the
//! topping must lie inside the dough.

use std::collections::BTreeMap;
use std::path::Path;

use pizza_core::{ConvexPolygon, GeomError, Pizza, Point2};
use serde::{Deserialize, Serialize};

use crate::error::AppError;
use crate::{read_file, FORMAT_VERSION};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PizzaDocument {
    pub format_version: String,
    pub topping: Vec<Point2>,
    pub dough: Vec<Point2>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl PizzaDocument {
    pub fn from_pizza(pizza: &Pizza, metadata: Option<Metadata>) -> Self {
        PizzaDocument {
            format_version: FORMAT_VERSION.to_string(),
            topping: pizza.topping().vertices().to_vec(),
            dough: pizza.dough().vertices().to_vec(),
            metadata,
        }
    }

    /// Parses and checks the format version. Geometry is checked by
    /// [`PizzaDocument::to_pizza`].
    pub fn from_json(text: &str) -> Result<Self, AppError> {
        let doc: PizzaDocument = serde_json::from_str(text).map_err(|e| {
            AppError::InvalidInput(format!(
                "not a pizza document ({e}); expected {{\"format_version\": \"{FORMAT_VERSION}\", \"topping\": [[x, y], ...], \"dough\": [[x, y], ...]}}"
            ))
        })?;
        if doc.format_version != FORMAT_VERSION {
            return Err(AppError::InvalidInput(format!(
                "unsupported format_version \"{}\"; this build reads \"{FORMAT_VERSION}\"",
                doc.format_version
            )));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        crate::to_json(self)
    }

    pub fn to_pizza(&self) -> Result<Pizza, AppError> {
        let body = |name: &str, vertices: &[Point2]| {
            ConvexPolygon::new(vertices.to_vec()).map_err(|e| AppError::InvalidInput(format!("{name}: {e}")))
        };
        let topping = body("topping", &self.topping)?;
        let dough = body("dough", &self.dough)?;
        Pizza::new(topping, dough).map_err(|e| match e {
            GeomError::NotNested { .. } => {
                AppError::InvalidInput(format!("{e}; the topping must lie inside the dough"))
            }
            other => AppError::InvalidInput(other.to_string()),
        })
    }

    pub fn load(path: &Path) -> Result<(PizzaDocument, Pizza), AppError> {
        let doc = Self::from_json(&read_file(path)?).map_err(|e| match e {
            AppError::InvalidInput(msg) => AppError::InvalidInput(format!("{}: {msg}", path.display())),
            other => other,
        })?;
        let pizza = doc.to_pizza().map_err(|e| match e {
            AppError::InvalidInput(msg) => AppError::InvalidInput(format!("{}: {msg}", path.display())),
            other => other,
        })?;
        Ok((doc, pizza))
    }
}
