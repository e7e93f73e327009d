use alloc::vec::Vec;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    #[inline]
    pub fn squared_distance(&self, other: &Point) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Self { x, y }
    }
}

/// Complete Euclidean graph over a point set with edge cost equal to the
/// squared distance, together with the hop bound `D`.
///
/// Immutable once built; share it freely between threads.
#[derive(Debug, Clone)]
pub struct Instance {
    points: Vec<Point>,
    hop_bound: usize,
    cost: Vec<f64>,
}

impl Instance {
    pub fn new(points: Vec<Point>, hop_bound: usize) -> Result<Self> {
        let n = points.len();
        if n < 2 {
            return Err(Error::TooFewPoints(n));
        }
        if hop_bound < 1 {
            return Err(Error::InvalidHopBound(hop_bound));
        }
        // D = 1 admits only the single-edge tree.
        if hop_bound == 1 && n > 2 {
            return Err(Error::NoFeasibleTree { n, hop_bound });
        }
        if let Some(i) = points.iter().position(|p| !(p.x.is_finite() && p.y.is_finite())) {
            return Err(Error::NonFiniteCoordinate(i));
        }
        let mut cost = alloc::vec![0.0; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let c = points[i].squared_distance(&points[j]);
                cost[i * n + j] = c;
                cost[j * n + i] = c;
            }
        }
        Ok(Self {
            points,
            hop_bound,
            cost,
        })
    }

    pub fn from_coords<I>(coords: I, hop_bound: usize) -> Result<Self>
    where
        I: IntoIterator<Item = (f64, f64)>,
    {
        Self::new(coords.into_iter().map(Point::from).collect(), hop_bound)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.points.len()
    }

    /// The hop-diameter bound `D`.
    #[inline]
    pub fn hop_bound(&self) -> usize {
        self.hop_bound
    }

    /// Deepest level allowed below the center(s), `floor(D / 2)`.
    #[inline]
    pub fn max_level(&self) -> usize {
        self.hop_bound / 2
    }

    /// Odd `D` means two adjacent centers.
    #[inline]
    pub fn has_two_centers(&self) -> bool {
        self.hop_bound % 2 == 1
    }

    #[inline]
    pub fn cost(&self, i: usize, j: usize) -> f64 {
        self.cost[i * self.n() + j]
    }

    pub fn cost_row(&self, i: usize) -> &[f64] {
        let n = self.n();
        &self.cost[i * n..(i + 1) * n]
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Same point set under a different hop bound.
    pub fn with_hop_bound(&self, hop_bound: usize) -> Result<Self> {
        Self::new(self.points.clone(), hop_bound)
    }

    /// Vertex closest to the centroid of the point set; ties go to the smaller id.
    pub fn centroid_vertex(&self) -> usize {
        let n = self.n() as f64;
        let (sx, sy) = self
            .points
            .iter()
            .fold((0.0, 0.0), |(sx, sy), p| (sx + p.x, sy + p.y));
        let centroid = Point::new(sx / n, sy / n);
        let mut best = 0;
        let mut best_d = f64::INFINITY;
        for (i, p) in self.points.iter().enumerate() {
            let d = p.squared_distance(&centroid);
            if d < best_d {
                best = i;
                best_d = d;
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_edge() {
        let inst = Instance::from_coords([(0.0, 0.0), (1.0, 0.0)], 1).unwrap();
        assert_eq!(inst.cost_row(0), &[0.0, 1.0]);
        assert_eq!(inst.cost_row(1), &[1.0, 0.0]);
    }

    #[test]
    fn pythagorean_cost() {
        let inst = Instance::from_coords([(0.0, 0.0), (3.0, 4.0)], 2).unwrap();
        assert_eq!(inst.cost(0, 1), 25.0);
    }

    #[test]
    fn coincident_points_are_valid() {
        let inst = Instance::from_coords([(0.0, 0.0), (0.0, 0.0)], 3).unwrap();
        assert_eq!(inst.cost(0, 1), 0.0);
        assert_eq!(inst.max_level(), 1);
        assert!(inst.has_two_centers());
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            Instance::from_coords([(0.0, 0.0)], 2).unwrap_err(),
            Error::TooFewPoints(1)
        );
        assert_eq!(
            Instance::from_coords([(0.0, 0.0), (1.0, 1.0)], 0).unwrap_err(),
            Error::InvalidHopBound(0)
        );
        assert_eq!(
            Instance::from_coords([(0.0, 0.0), (f64::NAN, 1.0)], 2).unwrap_err(),
            Error::NonFiniteCoordinate(1)
        );
        assert!(matches!(
            Instance::from_coords([(0.0, 0.0), (1.0, 1.0), (2.0, 2.0)], 1),
            Err(Error::NoFeasibleTree { n: 3, hop_bound: 1 })
        ));
    }

    #[test]
    fn cost_matrix_is_symmetric_squared_distance() {
        let pts = [(0.1, 0.9), (0.4, 0.2), (0.75, 0.5), (0.3, 0.3)];
        let inst = Instance::from_coords(pts, 4).unwrap();
        for i in 0..4 {
            assert_eq!(inst.cost(i, i), 0.0);
            for j in 0..4 {
                let (xi, yi) = pts[i];
                let (xj, yj) = pts[j];
                let expect = (xi - xj) * (xi - xj) + (yi - yj) * (yi - yj);
                assert_eq!(inst.cost(i, j), expect);
                assert_eq!(inst.cost(i, j), inst.cost(j, i));
            }
        }
    }
}
