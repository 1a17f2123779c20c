use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use super::Point2;

/// Which closed half-plane of an oriented line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Left of the line: `<x, u'(theta)> >= t`.
    Plus,
    /// Right of the line: `<x, u'(theta)> <= t`.
    Minus,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Plus => Side::Minus,
            Side::Minus => Side::Plus,
        }
    }
}

/// Reduces an angle to `[0, 2pi)`.
pub fn normalize_angle(theta: f64) -> f64 {
    let r = theta.rem_euclid(TAU);
    // rem_euclid rounds tiny negative inputs up to exactly TAU
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Unit direction `u(theta)` and its left normal `u'(theta)`.
#[inline]
pub fn direction_vectors(theta: f64) -> (Point2, Point2) {
    let (s, c) = theta.sin_cos();
    (Point2::new(c, s), Point2::new(-s, c))
}

/// An oriented line, parameterized by its direction `theta` and its signed
/// distance `t` from the origin.
///
/// The line is `{x : <x, u'(theta)> = t}` traversed along `u(theta)`; the
/// closed half-plane on its left is [`Side::Plus`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrientedLine {
    theta: f64,
    t: f64,
}

impl OrientedLine {
    pub fn new(theta: f64, t: f64) -> Self {
        OrientedLine {
            theta: normalize_angle(theta),
            t,
        }
    }

    /// The line through `p` oriented towards `q`.
    pub fn through(p: Point2, q: Point2) -> Self {
        let d = q - p;
        let theta = d.y.atan2(d.x);
        let (_, normal) = direction_vectors(theta);
        OrientedLine::new(theta, p.dot(normal))
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn direction(&self) -> Point2 {
        direction_vectors(self.theta).0
    }

    pub fn normal(&self) -> Point2 {
        direction_vectors(self.theta).1
    }

    /// `<p, u'(theta)> - t`: non-negative on the plus side, non-positive on
    /// the minus side.
    #[inline]
    pub fn side_of(&self, p: Point2) -> f64 {
        p.dot(self.normal()) - self.t
    }

    /// Same geometric line with the opposite orientation; plus and minus
    /// half-planes are swapped.
    pub fn reversed(&self) -> OrientedLine {
        OrientedLine::new(self.theta + PI, -self.t)
    }

    /// Orthogonal projection of the origin onto the line.
    pub fn anchor(&self) -> Point2 {
        self.normal() * self.t
    }
}

/// Free-function form of [`OrientedLine::side_of`].
pub fn side_of(line: &OrientedLine, p: Point2) -> f64 {
    line.side_of(p)
}
