use super::visits::{is_degenerate, remove_duplicates, trace_raw, VisitMapping};
use crate::error::{Error, Result};
use crate::geom::{Point, Polygon};
use crate::grid::{CellSet, GridCycle, GridVertex};
use crate::metrics::narrowness;
use crate::scalar::Scalar;

const PERTURB: f64 = 1e-7;
const CORNER_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct FrechetBuild<T> {
    pub chain: VisitMapping<T>,
    pub cycle: GridCycle,
    pub cells: CellSet,
    /// Measured √2-narrowness of the input.
    pub beta_measured: T,
    /// `beta_measured` raised to at least √2.
    pub beta_used: T,
    /// `(beta_used + √2) / 2`.
    pub claimed_bound: T,
    /// Whether the input was shifted slightly to avoid square corners.
    pub perturbed: bool,
}

impl<T: Scalar> FrechetBuild<T> {
    /// The output boundary in construction order, collinear vertices dropped.
    pub fn boundary_points(&self) -> Vec<Point<T>> {
        self.cycle.corner_points()
    }
}

fn sign(v: f64) -> i64 {
    if v < 0.0 {
        -1
    } else {
        1
    }
}

fn ccw(v: Vec<GridVertex>) -> Result<GridCycle> {
    let c = GridCycle::new(v)?;
    Ok(if c.is_ccw() { c } else { c.reversed() })
}

/// Turns a duplicate-free chain into a grid cycle; chains of one or two
/// vertices are extended to a unit square on the side where `∂P` lies.
pub fn degenerate_expand<T: Scalar>(vm: &VisitMapping<T>, p: &Polygon<T>) -> Result<GridCycle> {
    let verts = vm.vertices();
    match verts.len() {
        0 => Err(Error::InvalidCycle("empty visit chain".into())),
        1 => {
            let v = verts[0];
            let o = v.to_point::<T>();
            let far = p
                .vertices()
                .iter()
                .copied()
                .max_by(|a, b| a.dist(o).partial_cmp(&b.dist(o)).unwrap())
                .unwrap();
            let dx = sign((far.x - o.x).to_f64_lossy());
            let dy = sign((far.y - o.y).to_f64_lossy());
            ccw(vec![v, v.offset(dx, 0), v.offset(dx, dy), v.offset(0, dy)])
        }
        2 => {
            let (u, v) = (verts[0], verts[1]);
            let horizontal = u.y == v.y;
            let o = u.to_point::<T>();
            let perp = |q: Point<T>| if horizontal { q.y - o.y } else { q.x - o.x };
            let far = p
                .vertices()
                .iter()
                .copied()
                .max_by(|a, b| perp(*a).abs().partial_cmp(&perp(*b).abs()).unwrap())
                .unwrap();
            let s = sign(perp(far).to_f64_lossy());
            let (dx, dy) = if horizontal { (0, s) } else { (s, 0) };
            ccw(vec![u, v, v.offset(dx, dy), u.offset(dx, dy)])
        }
        _ => GridCycle::new(verts),
    }
}

/// Grid polygon whose boundary follows `∂P` within `(β + √2) / 2` in Fréchet distance,
/// where β is the measured √2-narrowness of `p`.
pub fn construct_frechet<T: Scalar>(p: &Polygon<T>) -> Result<FrechetBuild<T>> {
    let mut work = p.clone();
    let mut perturbed = false;
    let mut shift = T::lit(PERTURB);
    let mut chain = trace_raw(&work);
    let mut tries = 0;
    while is_degenerate(&work, T::lit(CORNER_TOL)) || !chain.is_chain() {
        tries += 1;
        if tries > 8 {
            return Err(Error::Invariant(
                "could not perturb input off square corners".into(),
            ));
        }
        work = p.translate(Point::new(shift, shift * T::lit(0.7)));
        perturbed = true;
        shift = shift * T::lit(3.0);
        chain = trace_raw(&work);
    }
    let chain = remove_duplicates(&chain);
    let cycle = degenerate_expand(&chain, &work)?;
    let cells = cycle.interior_cells();
    if cells.is_empty() {
        return Err(Error::InvalidCycle("cycle encloses no cells".into()));
    }
    cells
        .validate_grid_polygon()
        .map_err(|e| Error::Invariant(format!("cycle interior is not a grid polygon: {e}")))?;
    let sqrt2 = T::SQRT_2();
    let (beta, _) = narrowness(p, sqrt2)?;
    let beta_used = beta.max(sqrt2);
    Ok(FrechetBuild {
        chain,
        cycle,
        cells,
        beta_measured: beta,
        beta_used,
        claimed_bound: (beta_used + sqrt2) * T::half(),
        perturbed,
    })
}
