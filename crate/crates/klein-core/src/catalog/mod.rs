//! The catalog of supported reductive linear Lie groups, standard
//! subgroup embeddings, and their exact nu-image cone data.
//!
//! The built-in catalog is constructed in code (exact rational
//! arithmetic) and can be exported to, or replaced by, a versioned JSON
//! file; loading refuses catalogs that fail validation.  Override the
//! bundled data with the `KLEIN_CATALOG` environment variable.

pub mod families;
mod schema;
mod spin;

pub(crate) mod embeddings;

pub use embeddings::NamedEmbedding;
pub use families::{parse_group, Family, GroupDescriptor};
pub use schema::{cone_from_file, cone_to_file, ConeFile};

use once_cell::sync::Lazy;

use crate::cones::{ConeUnion, ConvexCone, PointCloud, Provenance};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, RationalVector, SNAP_DENOMINATOR_BOUND};

/// Default word length for sampled nu-images; every verdict derived from
/// them is flagged empirical.
pub const DEFAULT_SAMPLED_WORD_LENGTH: usize = 8;

/// Membership tolerance for defining-equation residuals.
pub const MEMBERSHIP_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct Catalog {
    pub version: String,
    embeddings: Vec<NamedEmbedding>,
}

static BUILTIN: Lazy<Catalog> = Lazy::new(|| {
    let cat = Catalog::build_builtin().expect("builtin catalog construction");
    cat.validate().expect("builtin catalog validation");
    cat
});

impl Catalog {
    /// The bundled catalog, or the JSON file named by `KLEIN_CATALOG`
    /// when that variable is set.
    pub fn load_default() -> Result<std::borrow::Cow<'static, Catalog>> {
        match std::env::var_os("KLEIN_CATALOG") {
            Some(path) => {
                let text = std::fs::read_to_string(&path).map_err(|e| {
                    Error::InvalidCatalog(format!("cannot read {:?}: {}", path, e))
                })?;
                let cat = Catalog::from_json(&text)?;
                Ok(std::borrow::Cow::Owned(cat))
            }
            None => Ok(std::borrow::Cow::Borrowed(Self::builtin())),
        }
    }

    pub fn builtin() -> &'static Catalog {
        &BUILTIN
    }

    fn build_builtin() -> Result<Catalog> {
        let mut embeddings = Vec::new();
        // Standard orthogonal blocks O(p,q) < O(p,q+1).
        for p in 1..=12usize {
            for q in 0..=7usize {
                if p + q + 1 <= 16 {
                    embeddings.push(embeddings::o_in_o(p, q)?);
                }
            }
        }
        // Realifications.
        for n in 1..=4 {
            embeddings.push(embeddings::u_in_o(n)?);
        }
        for n in 1..=3 {
            embeddings.push(embeddings::sp_in_o(n)?);
        }
        embeddings.push(embeddings::spin_in_o()?);
        // Special linear blocks.
        for n in 3..=6 {
            for m in 2..n {
                embeddings.push(embeddings::sl_in_sl(n, m)?);
            }
        }
        // Diagonal torus, maximal compacts.
        embeddings.push(embeddings::torus_in_sl2()?);
        for n in 2..=6 {
            embeddings.push(embeddings::maxcompact_in(GroupDescriptor::sl(n))?);
        }
        for n in 1..=6 {
            embeddings.push(embeddings::maxcompact_in(GroupDescriptor::gl(n))?);
        }
        // Group manifolds diag(G') < G' x G'.
        embeddings.push(embeddings::diag_in_square(&GroupDescriptor::sl(2))?);
        embeddings.push(embeddings::diag_in_square(&GroupDescriptor::gl(1))?);
        embeddings.push(embeddings::diag_in_square(&GroupDescriptor::o(2, 1))?);
        // Subspace example: the x-axis inside the Abelian group R^2.
        embeddings.push(embeddings::factor_left_gl1()?);
        Ok(Catalog {
            version: "1".into(),
            embeddings,
        })
    }

    pub fn named_embeddings(&self) -> &[NamedEmbedding] {
        &self.embeddings
    }

    pub fn subgroups_of(&self, ambient: &GroupDescriptor) -> Vec<&NamedEmbedding> {
        self.embeddings
            .iter()
            .filter(|e| &e.ambient == ambient)
            .collect()
    }

    /// Finds an embedding by ambient, subgroup and name.
    pub fn find(
        &self,
        ambient: &GroupDescriptor,
        subgroup: &GroupDescriptor,
        name: &str,
    ) -> Result<&NamedEmbedding> {
        self.embeddings
            .iter()
            .find(|e| &e.ambient == ambient && &e.subgroup == subgroup && e.name == name)
            .ok_or_else(|| {
                let near: Vec<String> = self
                    .subgroups_of(ambient)
                    .iter()
                    .map(|e| format!("{}:{}", e.subgroup, e.name))
                    .collect();
                Error::UnknownEmbedding(format!(
                    "{} < {} [{}]; catalog entries for this ambient: {}",
                    subgroup,
                    ambient,
                    name,
                    if near.is_empty() {
                        "none".into()
                    } else {
                        near.join(", ")
                    }
                ))
            })
    }

    /// Resolves "SUBGROUP:embedding" syntax against an ambient group.
    /// A missing ":embedding" part matches when exactly one entry fits.
    pub fn resolve(&self, ambient: &GroupDescriptor, spec: &str) -> Result<&NamedEmbedding> {
        let (group_part, name_part) = match spec.split_once(':') {
            Some((g, n)) => (g.trim(), Some(n.trim())),
            None => (spec.trim(), None),
        };
        let subgroup = parse_group(group_part)?;
        match name_part {
            Some(name) => self.find(ambient, &subgroup, name),
            None => {
                let hits: Vec<&NamedEmbedding> = self
                    .embeddings
                    .iter()
                    .filter(|e| &e.ambient == ambient && e.subgroup == subgroup)
                    .collect();
                match hits.len() {
                    1 => Ok(hits[0]),
                    0 => self.find(ambient, &subgroup, ""),
                    _ => Err(Error::UnknownEmbedding(format!(
                        "{} < {} is ambiguous; add :name among {}",
                        subgroup,
                        ambient,
                        hits.iter()
                            .map(|e| e.name.clone())
                            .collect::<Vec<_>>()
                            .join(", ")
                    ))),
                }
            }
        }
    }

    /// Structural and numerical checks run on every load.
    pub fn validate(&self) -> Result<()> {
        for e in &self.embeddings {
            let n = e.ambient.ambient_size();
            if e.generators.is_empty() {
                return Err(Error::InvalidCatalog(format!(
                    "{}: embedding without generators",
                    e.key()
                )));
            }
            for g in &e.generators {
                if g.rows() != n || g.cols() != n {
                    return Err(Error::InvalidCatalog(format!(
                        "{}: generator size {}x{}, ambient needs {}",
                        e.key(),
                        g.rows(),
                        g.cols(),
                        n
                    )));
                }
                let res = e.ambient.membership_residual(&g.to_matrix())?;
                if res > MEMBERSHIP_TOL {
                    return Err(Error::InvalidCatalog(format!(
                        "{}: generator residual {:.3e}",
                        e.key(),
                        res
                    )));
                }
            }
            if e.nu_cone.ambient_dim != e.ambient.cartan_dim() {
                return Err(Error::InvalidCatalog(format!(
                    "{}: cone lives in R^{}, ambient chamber is R^{}",
                    e.key(),
                    e.nu_cone.ambient_dim,
                    e.ambient.cartan_dim()
                )));
            }
            if e.nu_cone.provenance != Provenance::Exact {
                return Err(Error::InvalidCatalog(format!(
                    "{}: catalog cones must be exact",
                    e.key()
                )));
            }
            if e.subgroup.real_rank() > e.ambient.real_rank()
                || e.subgroup.d_dim() > e.ambient.d_dim()
            {
                return Err(Error::InvalidCatalog(format!(
                    "{}: subgroup invariants exceed ambient",
                    e.key()
                )));
            }
            // Every ray witness must land in the ambient group and
            // project onto its cone ray; checked via the canonical form.
            let canon = e.nu_cone.canonicalized();
            let nrays: usize = canon.pieces.iter().map(|p| p.generators.len()).sum();
            if e.ray_witnesses.len() != nrays {
                return Err(Error::InvalidCatalog(format!(
                    "{}: {} ray witnesses for {} extreme rays",
                    e.key(),
                    e.ray_witnesses.len(),
                    nrays
                )));
            }
            let rays: Vec<&RationalVector> = canon
                .pieces
                .iter()
                .flat_map(|p| p.generators.iter())
                .collect();
            for (w, ray) in e.ray_witnesses.iter().zip(rays) {
                let wf = w.to_matrix();
                let res = e.ambient.membership_residual(&wf)?;
                if res > MEMBERSHIP_TOL {
                    return Err(Error::InvalidCatalog(format!(
                        "{}: ray witness residual {:.3e}",
                        e.key(),
                        res
                    )));
                }
                let v = crate::cartan::nu(&e.ambient, &wf)?;
                if !is_parallel(&v.coords, &ray.to_f64(), 1e-8) {
                    return Err(Error::InvalidCatalog(format!(
                        "{}: witness nu {:?} is not parallel to ray {:?}",
                        e.key(),
                        v.coords,
                        ray
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        schema::catalog_to_json(self)
    }

    pub fn from_json(text: &str) -> Result<Catalog> {
        let cat = schema::catalog_from_json(text)?;
        cat.validate()?;
        Ok(cat)
    }

    pub(crate) fn from_parts(version: String, embeddings: Vec<NamedEmbedding>) -> Catalog {
        Catalog {
            version,
            embeddings,
        }
    }
}

fn is_parallel(a: &[f64], b: &[f64], tol: f64) -> bool {
    let na = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let nb = b.iter().map(|x| x * x).sum::<f64>().sqrt();
    if na < tol || nb < tol {
        return na < tol && nb < tol;
    }
    a.iter()
        .zip(b)
        .all(|(x, y)| (x / na - y / nb).abs() < tol)
}

/// A subgroup handed to the decision procedures: either a catalog
/// embedding with exact cone data, or a sampled subgroup given by
/// generator matrices, whose nu-image is an empirical hull.
#[derive(Debug, Clone)]
pub enum SubgroupSpec {
    Catalog(NamedEmbedding),
    Sampled {
        ambient: GroupDescriptor,
        generators: Vec<Matrix>,
        word_length: usize,
    },
}

impl SubgroupSpec {
    pub fn sampled(ambient: GroupDescriptor, generators: Vec<Matrix>) -> Self {
        SubgroupSpec::Sampled {
            ambient,
            generators,
            word_length: DEFAULT_SAMPLED_WORD_LENGTH,
        }
    }

    pub fn ambient(&self) -> &GroupDescriptor {
        match self {
            SubgroupSpec::Catalog(e) => &e.ambient,
            SubgroupSpec::Sampled { ambient, .. } => ambient,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, SubgroupSpec::Catalog(_))
    }

    pub fn label(&self) -> String {
        match self {
            SubgroupSpec::Catalog(e) => format!("{}:{}", e.subgroup, e.name),
            SubgroupSpec::Sampled { generators, .. } => {
                format!("sampled({} generators)", generators.len())
            }
        }
    }

    /// The nu-image as cone data: exact for catalog embeddings, the
    /// conical hull of sampled words (flagged empirical) otherwise.
    pub fn nu_image(&self) -> Result<ConeUnion> {
        match self {
            SubgroupSpec::Catalog(e) => Ok(e.nu_cone.clone()),
            SubgroupSpec::Sampled {
                ambient,
                generators,
                ..
            } => {
                if generators.is_empty() {
                    return Err(Error::Contract(
                        "sampled subgroup needs at least one generator".into(),
                    ));
                }
                let cloud = self.nu_cloud()?;
                let dim = ambient.cartan_dim();
                let mut rays: Vec<RationalVector> = Vec::new();
                for p in &cloud.points {
                    let norm = p.iter().map(|x| x * x).sum::<f64>().sqrt();
                    if norm < 1e-9 {
                        continue;
                    }
                    let dir: Vec<f64> = p.iter().map(|x| x / norm).collect();
                    let (v, _snap) = RationalVector::from_floats(&dir, SNAP_DENOMINATOR_BOUND);
                    if v.is_zero() {
                        continue;
                    }
                    let v = v.primitive();
                    if !rays.contains(&v) {
                        rays.push(v);
                    }
                }
                let piece = if rays.is_empty() {
                    ConvexCone::origin()
                } else {
                    ConvexCone::from_rays(rays)
                };
                let mut cone = ConeUnion::new(dim, vec![piece], Provenance::Empirical)?;
                cone.weyl_saturated = false;
                Ok(cone)
            }
        }
    }

    /// The sampled nu point cloud (catalog embeddings sample their own
    /// generators, so both variants feed the empirical tests).
    pub fn nu_cloud(&self) -> Result<PointCloud> {
        let (ambient, mats, len) = match self {
            SubgroupSpec::Catalog(e) => {
                let mats: Vec<Matrix> = e.generators.iter().map(|g| g.to_matrix()).collect();
                (&e.ambient, mats, DEFAULT_SAMPLED_WORD_LENGTH.min(6))
            }
            SubgroupSpec::Sampled {
                ambient,
                generators,
                word_length,
            } => (ambient, generators.clone(), *word_length),
        };
        let group = crate::dynamics::FinitelyGeneratedGroup::new(ambient.clone(), mats)?;
        let words = crate::dynamics::enumerate_words(&group, len)?;
        let dim = ambient.cartan_dim();
        let mut points = Vec::with_capacity(words.len());
        let mut labels = Vec::with_capacity(words.len());
        for w in &words {
            points.push(w.nu.coords.clone());
            labels.push(crate::cones::PointLabel {
                word: w.display.clone(),
                length: w.length(),
            });
        }
        PointCloud::new(dim, points, labels)
    }
}
