use std::f64::consts::{PI, SQRT_2};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{Point, Polygon};

/// How the non-spike vertices of the comb are placed along the vertical edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CombLayout {
    /// Every vertex at height `i/√2`; spikes have length exactly `β/2` per side.
    #[default]
    Uniform,
    /// Odd vertices at height `i/2`, even (spike) vertices at `i/√2`.
    Literal,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CombParams {
    pub beta: f64,
    /// Number of vertices on the replaced edge (odd).
    pub n: usize,
    /// Smallest interior angle the base polygon may have.
    pub phi: f64,
    /// Number of sides of the regular base polygon.
    pub k: usize,
    pub side: f64,
}

impl CombParams {
    pub fn new(beta: f64) -> Result<Self> {
        if !(beta > SQRT_2) || !beta.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "comb needs beta > sqrt(2), got {beta}"
            )));
        }
        let n = 2 * ((beta * beta - 2.0).sqrt() / 4.0).ceil() as usize + 1;
        let phi = (1.0 - 4.0 / (beta * beta)).acos();
        let mut k = 4;
        while ((k as f64 - 2.0) * PI / k as f64) < phi - 1e-12 {
            k += 1;
        }
        let side = (n as f64 - 1.0) / SQRT_2;
        Ok(CombParams {
            beta,
            n,
            phi,
            k,
            side,
        })
    }

    /// Vertices `p_1..p_n` of the comb edge.
    pub fn spine(&self, layout: CombLayout) -> Vec<Point<f64>> {
        let reach = 0.5 * (self.beta * self.beta - 2.0).sqrt();
        (1..=self.n)
            .map(|i| {
                let fi = i as f64;
                if i % 2 == 1 {
                    match layout {
                        CombLayout::Uniform => Point::new(0.0, fi / SQRT_2),
                        CombLayout::Literal => Point::new(0.0, fi / 2.0),
                    }
                } else {
                    Point::new(reach, fi / SQRT_2)
                }
            })
            .collect()
    }
}

/// Straight run kept above and below the spikes on the replaced edge. With
/// the base polygon's side equal to the spike span alone, the ends of the comb
/// sit on base corners and, for small `n`, opposite base edges are exactly √2
/// apart; either lets pairs at distance √2 exceed perimeter distance β.
pub const COMB_PAD: f64 = SQRT_2;

/// Regular polygon whose right vertical edge is replaced by a comb of spikes
/// flanked by straight runs of length [`COMB_PAD`].
pub fn comb_polygon(beta: f64) -> Result<Polygon<f64>> {
    comb_polygon_with(beta, CombLayout::Uniform)
}

pub fn comb_polygon_with(beta: f64, layout: CombLayout) -> Result<Polygon<f64>> {
    let cp = CombParams::new(beta)?;
    let spine = cp.spine(layout);
    let mid = 0.5 * (spine[0].y + spine[cp.n - 1].y);
    let k = cp.k as f64;
    let side = cp.side + 2.0 * COMB_PAD;
    let apothem = side / (2.0 * (PI / k).tan());
    let radius = side / (2.0 * (PI / k).sin());
    let center = Point::new(-apothem, mid);
    let corner = |m: usize| {
        let a = -PI / k + 2.0 * PI * m as f64 / k;
        let v = Point::new(center.x + radius * a.cos(), center.y + radius * a.sin());
        // snap the right edge exactly onto x = 0
        if m <= 1 {
            Point::new(0.0, v.y)
        } else {
            v
        }
    };
    let mut ring = vec![corner(0)];
    ring.extend(spine);
    ring.push(corner(1));
    ring.extend((2..cp.k).map(corner));
    Polygon::new(ring)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameters() {
        let c = CombParams::new(2.0).unwrap();
        assert_eq!((c.n, c.k), (3, 4));
        assert!((c.phi - PI / 2.0).abs() < 1e-12);
        assert!((c.side - SQRT_2).abs() < 1e-12);
        let lit = c.spine(CombLayout::Literal);
        let expect = [(0.0, 0.5), (0.5 * SQRT_2, SQRT_2), (0.0, 1.5)];
        for (p, e) in lit.iter().zip(expect) {
            assert!((p.x - e.0).abs() < 1e-5 && (p.y - e.1).abs() < 1e-5);
        }
        assert_eq!(CombParams::new(1.5).unwrap().k, 10);
        assert_eq!(CombParams::new(3.0).unwrap().k, 4);
        assert_eq!(CombParams::new(6.0).unwrap().n, 5);
        assert!(CombParams::new(SQRT_2).is_err());
    }

    #[test]
    fn uniform_comb_has_design_narrowness() {
        for beta in [1.5, 2.0, 3.0, 4.0, 6.0] {
            let p = comb_polygon(beta).unwrap();
            let (b, _) = crate::metrics::narrowness(&p, SQRT_2).unwrap();
            assert!((b - beta).abs() <= 1e-9 * beta, "{beta}: {b}");
        }
    }

    #[test]
    fn combs_are_simple() {
        for beta in [1.5, 2.0, 3.0, 4.0, 6.0] {
            for layout in [CombLayout::Uniform, CombLayout::Literal] {
                comb_polygon_with(beta, layout).unwrap();
            }
        }
    }
}
