//! K-nearest-neighbour similarity and distance between two point clouds.
//!
//! Two clouds are similar when most points of each lie inside the k-th
//! nearest-neighbour ball of some point of the other. The similarity is the
//! average of the two directed inclusion proportions and the distance is one
//! minus the similarity, so both live in `[0, 1]`.
//!
//! Conventions, fixed here and relied on by the tests:
//! - inclusion is strict (`d < radius`); a point exactly on a ball boundary
//!   does not count,
//! - a point's k-th neighbour radius never counts the point itself,
//! - ties among candidate neighbours are broken by point index,
//! - with `standardize`, each coordinate is z-scored with the mean and
//!   sample standard deviation pooled over both clouds before any distance
//!   is taken; a coordinate that is constant across the pool is left
//!   unscaled.
//!
//! A cloud whose points all coincide has radius 0 everywhere and similarity
//! 0 against anything, including itself; that is the documented consequence
//! of strict inclusion, not an error.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A set of equal-dimension points compared as one cluster.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud {
    dim: usize,
    data: Vec<f64>, // row-major, len = n * dim
}

impl PointCloud {
    /// Builds a cloud from row vectors, validating shape and finiteness.
    pub fn new(points: Vec<Vec<f64>>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidArgument("point cloud must be nonempty".into()));
        }
        let dim = points[0].len();
        if dim == 0 {
            return Err(Error::InvalidArgument("point dimension must be >= 1".into()));
        }
        let mut data = Vec::with_capacity(points.len() * dim);
        for (i, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(Error::InvalidArgument(format!(
                    "point {i} has dimension {}, expected {dim}",
                    p.len()
                )));
            }
            for &c in p {
                if !c.is_finite() {
                    return Err(Error::InvalidData(format!("point {i} has non-finite coordinate {c}")));
                }
                data.push(c);
            }
        }
        Ok(PointCloud { dim, data })
    }

    /// Builds a cloud from a flat row-major buffer.
    pub fn from_flat(dim: usize, data: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument("point dimension must be >= 1".into()));
        }
        if data.is_empty() || data.len() % dim != 0 {
            return Err(Error::InvalidArgument(format!(
                "flat buffer of length {} is not a nonempty multiple of dim {dim}",
                data.len()
            )));
        }
        if let Some(c) = data.iter().find(|c| !c.is_finite()) {
            return Err(Error::InvalidData(format!("non-finite coordinate {c}")));
        }
        Ok(PointCloud { dim, data })
    }

    /// One-dimensional cloud from scalar observations.
    pub fn from_scalars(values: &[f64]) -> Result<Self> {
        Self::from_flat(1, values.to_vec())
    }

    pub fn len(&self) -> usize {
        self.data.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        false // constructors reject empty clouds
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn points(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks_exact(self.dim)
    }

    pub(crate) fn flat(&self) -> &[f64] {
        &self.data
    }
}

/// Neighbour order and preprocessing for cloud comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KnnConfig {
    /// Neighbour order; must satisfy `1 <= k < min(|D|, |D*|)`.
    pub k: usize,
    /// Pooled z-scoring of each coordinate before any distance.
    pub standardize: bool,
}

impl Default for KnnConfig {
    fn default() -> Self {
        KnnConfig { k: 2, standardize: true }
    }
}

#[inline]
fn euclid(a: &[f64], b: &[f64]) -> f64 {
    let mut acc = 0.0;
    for (x, y) in a.iter().zip(b) {
        let d = x - y;
        acc += d * d;
    }
    acc.sqrt()
}

/// k-th smallest entry by `(value, index)`; the index keeps ties deterministic.
pub(crate) fn kth_smallest(scratch: &mut [(f64, u32)], k: usize) -> f64 {
    debug_assert!(k >= 1 && k <= scratch.len());
    let (_, kth, _) = scratch.select_nth_unstable_by(k - 1, |a, b| {
        a.0.total_cmp(&b.0).then(a.1.cmp(&b.1))
    });
    kth.0
}

/// k-th nearest-neighbour radius of every member within its own group, self
/// excluded. `dist` must be symmetric over the supplied indices.
pub(crate) fn group_radii<D: Fn(u32, u32) -> f64>(dist: &D, group: &[u32], k: usize) -> Vec<f64> {
    let mut scratch: Vec<(f64, u32)> = Vec::with_capacity(group.len().saturating_sub(1));
    group
        .iter()
        .map(|&i| {
            scratch.clear();
            for &j in group {
                if j != i {
                    scratch.push((dist(i, j), j));
                }
            }
            kth_smallest(&mut scratch, k)
        })
        .collect()
}

/// Similarity between two index groups under a shared distance function:
/// the average of the two directed inclusion proportions.
pub(crate) fn group_similarity<D: Fn(u32, u32) -> f64>(
    dist: &D,
    group_a: &[u32],
    group_b: &[u32],
    k: usize,
) -> f64 {
    let radii_a = group_radii(dist, group_a, k);
    let radii_b = group_radii(dist, group_b, k);

    let mut in_a = 0usize; // members of B inside some A-ball
    for &j in group_b {
        if group_a.iter().zip(&radii_a).any(|(&i, &r)| dist(i, j) < r) {
            in_a += 1;
        }
    }
    let mut in_b = 0usize; // members of A inside some B-ball
    for &i in group_a {
        if group_b.iter().zip(&radii_b).any(|(&j, &r)| dist(i, j) < r) {
            in_b += 1;
        }
    }
    0.5 * (in_a as f64 / group_b.len() as f64 + in_b as f64 / group_a.len() as f64)
}

/// Pooled coordinates of `a` followed by `b`, optionally z-scored per
/// coordinate with mean/sd taken over the pool. A constant coordinate keeps
/// scale 1 so the transform stays well defined.
pub(crate) fn pooled_coords(a: &PointCloud, b: &PointCloud, standardize: bool) -> Vec<f64> {
    let dim = a.dim();
    let mut coords = Vec::with_capacity(a.flat().len() + b.flat().len());
    coords.extend_from_slice(a.flat());
    coords.extend_from_slice(b.flat());
    if !standardize {
        return coords;
    }
    let n = coords.len() / dim;
    for c in 0..dim {
        let mut sum = 0.0;
        for r in 0..n {
            sum += coords[r * dim + c];
        }
        let mean = sum / n as f64;
        let mut ss = 0.0;
        for r in 0..n {
            let d = coords[r * dim + c] - mean;
            ss += d * d;
        }
        let sd = if n > 1 { (ss / (n - 1) as f64).sqrt() } else { 0.0 };
        let scale = if sd > 0.0 { sd } else { 1.0 };
        for r in 0..n {
            coords[r * dim + c] = (coords[r * dim + c] - mean) / scale;
        }
    }
    coords
}

fn validate_pair(d: &PointCloud, d_star: &PointCloud, cfg: &KnnConfig) -> Result<()> {
    if d.dim() != d_star.dim() {
        return Err(Error::InvalidArgument(format!(
            "dimension mismatch: {} vs {}",
            d.dim(),
            d_star.dim()
        )));
    }
    if cfg.k == 0 {
        return Err(Error::InvalidArgument("k must be >= 1".into()));
    }
    let min_n = d.len().min(d_star.len());
    if cfg.k >= min_n {
        return Err(Error::InvalidArgument(format!(
            "k = {} must be < min cloud size {min_n}",
            cfg.k
        )));
    }
    Ok(())
}

/// Distance from every point of `cloud` to its k-th closest other point
/// within the same cloud (raw coordinates, Euclidean metric).
pub fn kth_nn_radius(cloud: &PointCloud, k: usize) -> Result<Vec<f64>> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be >= 1".into()));
    }
    if k >= cloud.len() {
        return Err(Error::InvalidArgument(format!(
            "k = {k} must be < cloud size {}",
            cloud.len()
        )));
    }
    let dim = cloud.dim();
    let coords = cloud.flat();
    let dist = |i: u32, j: u32| {
        euclid(
            &coords[i as usize * dim..(i as usize + 1) * dim],
            &coords[j as usize * dim..(j as usize + 1) * dim],
        )
    };
    let group: Vec<u32> = (0..cloud.len() as u32).collect();
    Ok(group_radii(&dist, &group, k))
}

/// Similarity in `[0, 1]`: the mean of the two directed proportions of points
/// falling strictly inside some k-th-neighbour ball of the other cloud.
pub fn similarity(d: &PointCloud, d_star: &PointCloud, cfg: &KnnConfig) -> Result<f64> {
    validate_pair(d, d_star, cfg)?;
    let dim = d.dim();
    let coords = pooled_coords(d, d_star, cfg.standardize);
    let dist = |i: u32, j: u32| {
        euclid(
            &coords[i as usize * dim..(i as usize + 1) * dim],
            &coords[j as usize * dim..(j as usize + 1) * dim],
        )
    };
    let group_a: Vec<u32> = (0..d.len() as u32).collect();
    let group_b: Vec<u32> = (d.len() as u32..(d.len() + d_star.len()) as u32).collect();
    Ok(group_similarity(&dist, &group_a, &group_b, cfg.k))
}

/// `1 - similarity`; symmetric in its two arguments.
pub fn knn_distance(d: &PointCloud, d_star: &PointCloud, cfg: &KnnConfig) -> Result<f64> {
    similarity(d, d_star, cfg).map(|s| 1.0 - s)
}
