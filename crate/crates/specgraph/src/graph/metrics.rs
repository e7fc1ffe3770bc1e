use super::Graph;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Degrees (descending), their conjugate sequence, and the average degree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegreeProfile {
    /// `d_1 >= d_2 >= ... >= d_n`.
    pub degrees: Vec<usize>,
    /// `d*_k = #{v : d_v >= k}` for `k = 1..=n`.
    pub conjugate: Vec<usize>,
    /// `2m/n`.
    pub average: f64,
}

/// Per-vertex transmissions plus the Wiener index.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransmissionProfile {
    pub transmissions: Vec<usize>,
    pub wiener: usize,
    pub transmission_regular: bool,
}

/// All-pairs distances of a connected graph.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceData {
    pub dist: Vec<Vec<usize>>,
    pub transmission: TransmissionProfile,
    pub diameter: usize,
}

/// Descending degrees, conjugate degrees and average degree.
pub fn degree_profile(g: &Graph) -> DegreeProfile {
    let n = g.n();
    let mut degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let conjugate = (1..=n)
        .map(|k| degrees.iter().take_while(|&&d| d >= k).count())
        .collect();
    DegreeProfile {
        average: 2.0 * g.m() as f64 / n as f64,
        degrees,
        conjugate,
    }
}

/// Integer all-pairs distances via breadth-first search from every vertex.
///
/// Errors on disconnected input, naming two unreachable vertices.
pub fn distances(g: &Graph) -> Result<DistanceData> {
    let n = g.n();
    let mut dist = Vec::with_capacity(n);
    let mut diameter = 0;
    for src in 0..n {
        let row = g.bfs_distances(src);
        if let Some(far) = row.iter().position(|&d| d == usize::MAX) {
            return Err(Error::Disconnected(src, far));
        }
        diameter = diameter.max(*row.iter().max().unwrap());
        dist.push(row);
    }
    let transmissions: Vec<usize> = dist.iter().map(|row| row.iter().sum()).collect();
    let wiener = transmissions.iter().sum::<usize>() / 2;
    let transmission_regular = transmissions.windows(2).all(|w| w[0] == w[1]);
    Ok(DistanceData {
        dist,
        transmission: TransmissionProfile {
            transmissions,
            wiener,
            transmission_regular,
        },
        diameter,
    })
}
