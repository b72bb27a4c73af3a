//! Sampled properness evidence: near-cone counts over a radius schedule.
//!
//! This is the empirical side of the properness criterion.  A sampled
//! group stays properly discontinuous in evidence grade when, for every
//! radius, the points near the cone thin out as word length grows; it
//! fails when some fixed radius keeps capturing points at every word
//! length while their norms diverge.  Never a certificate.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par;

use super::{distance_to_cone, ConeUnion, PointCloud};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EvidenceVerdict {
    ProperEvidence,
    NonProperEvidence,
}

/// Near-cone bookkeeping for one word length.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LengthBucket {
    pub length: usize,
    pub total: usize,
    /// Points within each radius of the schedule.
    pub near_counts: Vec<usize>,
    /// Smallest cone distance attained at this length.
    pub min_distance: f64,
}

/// A point that stayed near the cone; reported for non-proper evidence.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NearWitness {
    pub word: String,
    pub length: usize,
    pub distance: f64,
    pub norm: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NearConeCounts {
    pub radii: Vec<f64>,
    /// N(R): points within radius R of the cone, per scheduled radius.
    pub counts: Vec<usize>,
    pub buckets: Vec<LengthBucket>,
    pub verdict: EvidenceVerdict,
    pub max_cloud_norm: f64,
    /// Per word length, the point closest to the cone.
    pub witnesses: Vec<NearWitness>,
}

/// Divergence threshold: a radius bucket only counts as "captures the
/// group at infinity" when it holds points of at least half the largest
/// sampled norm.
const NORM_DIVERGENCE_FRACTION: f64 = 0.5;

/// Counts cloud points near the cone union per radius and grades the
/// result.  `radii` must be nonempty and strictly increasing.
pub fn subset_proper_evidence(
    cloud: &PointCloud,
    cone: &ConeUnion,
    radii: &[f64],
) -> Result<NearConeCounts> {
    if cloud.points.is_empty() {
        return Err(Error::Contract("empty point cloud".into()));
    }
    if radii.is_empty() {
        return Err(Error::Contract("empty radius schedule".into()));
    }
    if radii.windows(2).any(|w| w[0] >= w[1]) || radii[0] < 0.0 {
        return Err(Error::Contract(
            "radii must be nonnegative and strictly increasing".into(),
        ));
    }
    if cloud.ambient_dim != cone.ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: cone.ambient_dim,
            got: cloud.ambient_dim,
        });
    }

    let distances = {
        let results = par::map_slice(&cloud.points, |p| distance_to_cone(p, cone));
        let mut out = Vec::with_capacity(results.len());
        for r in results {
            out.push(r?);
        }
        out
    };
    let norms: Vec<f64> = cloud
        .points
        .iter()
        .map(|p| p.iter().map(|x| x * x).sum::<f64>().sqrt())
        .collect();
    let max_cloud_norm = norms.iter().fold(0.0f64, |m, &n| m.max(n));

    let counts: Vec<usize> = radii
        .iter()
        .map(|&r| distances.iter().filter(|&&d| d <= r).count())
        .collect();

    let mut lengths: Vec<usize> = cloud.labels.iter().map(|l| l.length).collect();
    lengths.sort_unstable();
    lengths.dedup();

    let mut buckets = Vec::with_capacity(lengths.len());
    let mut witnesses = Vec::with_capacity(lengths.len());
    for &len in &lengths {
        let idx: Vec<usize> = (0..cloud.points.len())
            .filter(|&i| cloud.labels[i].length == len)
            .collect();
        let near_counts: Vec<usize> = radii
            .iter()
            .map(|&r| idx.iter().filter(|&&i| distances[i] <= r).count())
            .collect();
        let &closest = idx
            .iter()
            .min_by(|&&a, &&b| distances[a].partial_cmp(&distances[b]).unwrap())
            .unwrap();
        buckets.push(LengthBucket {
            length: len,
            total: idx.len(),
            near_counts,
            min_distance: distances[closest],
        });
        witnesses.push(NearWitness {
            word: cloud.labels[closest].word.clone(),
            length: len,
            distance: distances[closest],
            norm: norms[closest],
        });
    }

    // Non-proper evidence: some radius captures every word length and the
    // captured points reach toward infinity.
    let mut verdict = EvidenceVerdict::ProperEvidence;
    for (j, &r) in radii.iter().enumerate() {
        let every_length = buckets.iter().all(|b| b.near_counts[j] > 0);
        let max_near_norm = (0..cloud.points.len())
            .filter(|&i| distances[i] <= r)
            .map(|i| norms[i])
            .fold(0.0f64, f64::max);
        if every_length && max_near_norm >= NORM_DIVERGENCE_FRACTION * max_cloud_norm {
            verdict = EvidenceVerdict::NonProperEvidence;
            break;
        }
    }

    Ok(NearConeCounts {
        radii: radii.to_vec(),
        counts,
        buckets,
        verdict,
        max_cloud_norm,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cones::{ConeUnion, PointCloud, PointLabel};

    fn cloud_from(points: Vec<Vec<f64>>) -> PointCloud {
        let labels = points
            .iter()
            .enumerate()
            .map(|(i, _)| PointLabel {
                word: format!("g^{}", i + 1),
                length: i + 1,
            })
            .collect();
        PointCloud::new(2, points, labels).unwrap()
    }

    #[test]
    fn cloud_on_cone_is_nonproper_evidence() {
        let x_axis = ConeUnion::from_int_rays(2, &[&[1, 0], &[-1, 0]]).unwrap();
        let cloud = cloud_from((1..=15).map(|k| vec![k as f64, 0.0]).collect());
        let report = subset_proper_evidence(&cloud, &x_axis, &[0.1, 1.0]).unwrap();
        assert_eq!(report.verdict, EvidenceVerdict::NonProperEvidence);
        assert!(report.witnesses.iter().all(|w| w.distance == 0.0));
    }

    // Hand oracle: distance from (k,-k) to the diagonal ray is k*sqrt(2).
    #[test]
    fn escaping_cloud_is_proper_evidence() {
        let diag = ConeUnion::from_int_rays(2, &[&[1, 1]]).unwrap();
        let cloud = cloud_from((1..=15).map(|k| vec![k as f64, -(k as f64)]).collect());
        let report = subset_proper_evidence(&cloud, &diag, &[0.5, 2.0]).unwrap();
        assert_eq!(report.verdict, EvidenceVerdict::ProperEvidence);
        let w1 = &report.witnesses[0];
        assert!((w1.distance - 2.0f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn empty_rads_rejected() {
        let x_axis = ConeUnion::from_int_rays(2, &[&[1, 0]]).unwrap();
        let cloud = cloud_from(vec![vec![1.0, 0.0]]);
        assert!(subset_proper_evidence(&cloud, &x_axis, &[]).is_err());
    }
}
