//! Versioned JSON serialization for catalogs and cone files.
//!
//! Rationals are rendered as canonical "p/q" strings so the files are
//! exact and diff-stable; cone generators are written in primitive form
//! and lexicographic order.  See docs/catalog-schema.md for the format.

use serde::{Deserialize, Serialize};

use crate::cones::{ConeUnion, ConvexCone, Provenance};
use crate::error::{Error, Result};
use crate::linalg::{rat_from_string, rat_to_string, RatMatrix, RationalVector};

use super::embeddings::NamedEmbedding;
use super::{parse_group, Catalog};

#[derive(Serialize, Deserialize)]
struct CatalogFile {
    version: String,
    embeddings: Vec<EmbeddingFile>,
}

#[derive(Serialize, Deserialize)]
struct EmbeddingFile {
    ambient: String,
    subgroup: String,
    name: String,
    generators: Vec<Vec<Vec<String>>>,
    cone: ConeFile,
    ray_witnesses: Vec<Vec<Vec<String>>>,
}

/// JSON form of a cone union; also the CLI's cone file format.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConeFile {
    pub ambient_dim: usize,
    pub provenance: String,
    pub weyl_saturated: bool,
    pub pieces: Vec<PieceFile>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PieceFile {
    pub generators: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub equalities: Vec<Vec<String>>,
}

fn vector_to_strings(v: &RationalVector) -> Vec<String> {
    v.coords().iter().map(rat_to_string).collect()
}

fn vector_from_strings(raw: &[String]) -> Result<RationalVector> {
    let coords = raw
        .iter()
        .map(|s| rat_from_string(s))
        .collect::<Result<Vec<_>>>()?;
    RationalVector::new(coords)
}

fn matrix_to_strings(m: &RatMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| rat_to_string(&m[(r, c)])).collect())
        .collect()
}

fn matrix_from_strings(raw: &[Vec<String>]) -> Result<RatMatrix> {
    let rows = raw.len();
    if rows == 0 || raw.iter().any(|r| r.len() != raw[0].len()) {
        return Err(Error::InvalidCatalog("ragged matrix in file".into()));
    }
    let cols = raw[0].len();
    let mut m = RatMatrix::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            m[(r, c)] = rat_from_string(&raw[r][c])?;
        }
    }
    Ok(m)
}

/// Canonical cone serialization: primitive generators, lexicographic
/// order, stable piece order.
pub fn cone_to_file(cone: &ConeUnion) -> ConeFile {
    let canon = cone.canonicalized();
    ConeFile {
        ambient_dim: canon.ambient_dim,
        provenance: match canon.provenance {
            Provenance::Exact => "Exact".into(),
            Provenance::Empirical => "Empirical".into(),
        },
        weyl_saturated: canon.weyl_saturated,
        pieces: canon
            .pieces
            .iter()
            .map(|p| PieceFile {
                generators: p.generators.iter().map(vector_to_strings).collect(),
                equalities: p.equalities.iter().map(vector_to_strings).collect(),
            })
            .collect(),
    }
}

pub fn cone_from_file(file: &ConeFile) -> Result<ConeUnion> {
    let provenance = match file.provenance.as_str() {
        "Exact" => Provenance::Exact,
        "Empirical" => Provenance::Empirical,
        other => {
            return Err(Error::InvalidCatalog(format!(
                "unknown provenance {:?}",
                other
            )))
        }
    };
    let pieces = file
        .pieces
        .iter()
        .map(|p| {
            Ok(ConvexCone {
                generators: p
                    .generators
                    .iter()
                    .map(|g| vector_from_strings(g))
                    .collect::<Result<Vec<_>>>()?,
                equalities: p
                    .equalities
                    .iter()
                    .map(|e| vector_from_strings(e))
                    .collect::<Result<Vec<_>>>()?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut cone = ConeUnion::new(file.ambient_dim, pieces, provenance)?;
    cone.weyl_saturated = file.weyl_saturated;
    Ok(cone)
}

pub fn catalog_to_json(catalog: &Catalog) -> String {
    let file = CatalogFile {
        version: catalog.version.clone(),
        embeddings: catalog
            .named_embeddings()
            .iter()
            .map(|e| EmbeddingFile {
                ambient: e.ambient.to_string(),
                subgroup: e.subgroup.to_string(),
                name: e.name.clone(),
                generators: e.generators.iter().map(matrix_to_strings).collect(),
                cone: cone_to_file(&e.nu_cone),
                ray_witnesses: e.ray_witnesses.iter().map(matrix_to_strings).collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("catalog serialization")
}

pub fn catalog_from_json(text: &str) -> Result<Catalog> {
    let file: CatalogFile = serde_json::from_str(text)
        .map_err(|e| Error::InvalidCatalog(format!("JSON parse error: {}", e)))?;
    let mut embeddings = Vec::with_capacity(file.embeddings.len());
    for e in &file.embeddings {
        embeddings.push(NamedEmbedding {
            ambient: parse_group(&e.ambient)?,
            subgroup: parse_group(&e.subgroup)?,
            name: e.name.clone(),
            generators: e
                .generators
                .iter()
                .map(|m| matrix_from_strings(m))
                .collect::<Result<Vec<_>>>()?,
            nu_cone: cone_from_file(&e.cone)?,
            ray_witnesses: e
                .ray_witnesses
                .iter()
                .map(|m| matrix_from_strings(m))
                .collect::<Result<Vec<_>>>()?,
        });
    }
    Ok(Catalog::from_parts(file.version, embeddings))
}
