use serde::Serialize;

use super::{ConvexPolygon, GeomError, OrientedLine, Side};
use crate::tol::EPS_CONTAIN_REL;

/// A topping `A` nested in a dough `B`, with both areas cached.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Pizza {
    topping: ConvexPolygon,
    dough: ConvexPolygon,
    area_topping: f64,
    area_dough: f64,
}

impl Pizza {
    /// Checks that every topping vertex lies in the dough, up to
    /// `EPS_CONTAIN_REL` times the dough's extent.
    pub fn new(topping: ConvexPolygon, dough: ConvexPolygon) -> Result<Self, GeomError> {
        let tol = EPS_CONTAIN_REL * dough.extent();
        for (index, v) in topping.vertices().iter().enumerate() {
            let depth = dough.inner_distance(*v);
            if depth < -tol {
                return Err(GeomError::NotNested {
                    index,
                    x: v.x,
                    y: v.y,
                    excess: -depth,
                });
            }
        }
        let area_topping = topping.area();
        let area_dough = dough.area();
        Ok(Pizza {
            topping,
            dough,
            area_topping,
            area_dough,
        })
    }

    /// The pizza with identical topping and dough.
    pub fn plain(body: ConvexPolygon) -> Self {
        let area = body.area();
        Pizza {
            topping: body.clone(),
            dough: body,
            area_topping: area,
            area_dough: area,
        }
    }

    pub fn topping(&self) -> &ConvexPolygon {
        &self.topping
    }

    pub fn dough(&self) -> &ConvexPolygon {
        &self.dough
    }

    pub fn area_topping(&self) -> f64 {
        self.area_topping
    }

    pub fn area_dough(&self) -> f64 {
        self.area_dough
    }

    /// The sub-pizza on one side of a cut: dough and topping clipped by the
    /// same half-plane. `None` if either clip has no area.
    pub fn clip(&self, line: &OrientedLine, side: Side) -> Option<Pizza> {
        let dough = self.dough.clip(line, side)?;
        let topping = self.topping.clip(line, side)?;
        let area_topping = topping.area();
        let area_dough = dough.area();
        Some(Pizza {
            topping,
            dough,
            area_topping,
            area_dough,
        })
    }
}
