use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{EntropyCalc, EntropySource};
use crate::{Error, Result};

/// The seven regions of a three-set entropy diagram together with the seven
/// subset entropies they are built from. All values in bits.
///
/// `c_*` are the conditional-only regions (`c_x = S(X|YZ)`), `m_*` the
/// pairwise conditional mutual regions (`m_xy = S(X:Y|Z)`), and `t` the
/// ternary centre `S(X:Y:Z)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntropyDiagram {
    pub x: String,
    pub y: String,
    pub z: String,
    pub unit: String,
    pub c_x: f64,
    pub c_y: f64,
    pub c_z: f64,
    pub m_xy: f64,
    pub m_xz: f64,
    pub m_yz: f64,
    pub t: f64,
    pub s_x: f64,
    pub s_y: f64,
    pub s_z: f64,
    pub s_xy: f64,
    pub s_xz: f64,
    pub s_yz: f64,
    pub s_xyz: f64,
}

impl EntropyDiagram {
    /// Regions from the subset entropies `[S(X), S(Y), S(Z), S(XY), S(XZ), S(YZ), S(XYZ)]`.
    pub fn from_subsets(names: [&str; 3], s: [f64; 7]) -> Self {
        let [s_x, s_y, s_z, s_xy, s_xz, s_yz, s_xyz] = s;
        Self {
            x: names[0].to_owned(),
            y: names[1].to_owned(),
            z: names[2].to_owned(),
            unit: "bits".to_owned(),
            c_x: s_xyz - s_yz,
            c_y: s_xyz - s_xz,
            c_z: s_xyz - s_xy,
            m_xy: s_xz + s_yz - s_z - s_xyz,
            m_xz: s_xy + s_yz - s_y - s_xyz,
            m_yz: s_xy + s_xz - s_x - s_xyz,
            t: s_x + s_y + s_z - s_xy - s_xz - s_yz + s_xyz,
            s_x,
            s_y,
            s_z,
            s_xy,
            s_xz,
            s_yz,
            s_xyz,
        }
    }

    pub fn subsets(&self) -> [f64; 7] {
        [self.s_x, self.s_y, self.s_z, self.s_xy, self.s_xz, self.s_yz, self.s_xyz]
    }

    /// `S(X:Y) = m_xy + t`.
    pub fn mutual_xy(&self) -> f64 {
        self.m_xy + self.t
    }

    pub fn mutual_xz(&self) -> f64 {
        self.m_xz + self.t
    }

    pub fn mutual_yz(&self) -> f64 {
        self.m_yz + self.t
    }

    /// Largest deviation between the subset entropies and their
    /// reconstruction from the regions.
    pub fn reconstruction_residual(&self) -> f64 {
        let (cx, cy, cz, mxy, mxz, myz, t) = (self.c_x, self.c_y, self.c_z, self.m_xy, self.m_xz, self.m_yz, self.t);
        let rebuilt = [
            cx + mxy + mxz + t,
            cy + mxy + myz + t,
            cz + mxz + myz + t,
            cx + cy + mxy + mxz + myz + t,
            cx + cz + mxy + mxz + myz + t,
            cy + cz + mxy + mxz + myz + t,
            cx + cy + cz + mxy + mxz + myz + t,
        ];
        rebuilt.iter().zip(self.subsets()).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }

    /// Subset entropies keyed by group names (`"X"`, `"X,Y"`, ...).
    pub fn report(&self) -> EntropyReport {
        let (x, y, z) = (&self.x, &self.y, &self.z);
        let mut entries = BTreeMap::new();
        entries.insert(x.clone(), self.s_x);
        entries.insert(y.clone(), self.s_y);
        entries.insert(z.clone(), self.s_z);
        entries.insert(format!("{x},{y}"), self.s_xy);
        entries.insert(format!("{x},{z}"), self.s_xz);
        entries.insert(format!("{y},{z}"), self.s_yz);
        entries.insert(format!("{x},{y},{z}"), self.s_xyz);
        EntropyReport { entries }
    }
}

/// Entropies (bits) keyed by comma-joined group names.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EntropyReport {
    pub entries: BTreeMap<String, f64>,
}

impl EntropyReport {
    pub fn get(&self, key: &str) -> Option<f64> {
        self.entries.get(key).copied()
    }
}

/// Diagram over three groups of parts that together cover the whole source.
/// Group names are the comma-joined labels.
pub fn tripartite_diagram<S: EntropySource + ?Sized, L: AsRef<str>>(
    source: &S,
    x: &[L],
    y: &[L],
    z: &[L],
) -> Result<EntropyDiagram> {
    let name = |g: &[L]| g.iter().map(|l| l.as_ref()).collect::<Vec<_>>().join(",");
    let (nx, ny, nz) = (name(x), name(y), name(z));
    tripartite_diagram_named(source, [(&nx, x), (&ny, y), (&nz, z)])
}

/// Diagram over three named groups of parts covering the whole source.
pub fn tripartite_diagram_named<S: EntropySource + ?Sized, L: AsRef<str>>(
    source: &S,
    groups: [(&str, &[L]); 3],
) -> Result<EntropyDiagram> {
    let mut calc = EntropyCalc::new(source);
    let x = calc.resolve(groups[0].1)?;
    let y = calc.resolve(groups[1].1)?;
    let z = calc.resolve(groups[2].1)?;
    calc.disjoint(&[&x, &y, &z])?;
    if let Some(missing) = (0..source.part_count()).find(|p| !x.contains(p) && !y.contains(p) && !z.contains(p)) {
        return Err(Error::IncompletePartition(source.part_label(missing).to_owned()));
    }
    let s = [
        calc.joint(&[&x])?,
        calc.joint(&[&y])?,
        calc.joint(&[&z])?,
        calc.joint(&[&x, &y])?,
        calc.joint(&[&x, &z])?,
        calc.joint(&[&y, &z])?,
        calc.joint(&[&x, &y, &z])?,
    ];
    Ok(EntropyDiagram::from_subsets([groups[0].0, groups[1].0, groups[2].0], s))
}
