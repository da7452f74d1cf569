//! Versioned on-disk cache for computed graded bases.
//!
//! One JSON file per `(n, variant)`, keyed by the cache format version.
//! Rationals are stored as `"p/q"` strings and monomials as arrays of
//! `[i, j]` pairs, so entries are diff-friendly and byte-stable. Loading
//! revalidates the entry against a freshly built presentation; anything
//! malformed is reported as corrupt so callers can evict and recompute.

use crate::algebra::monomial::ExtMonomial;
use crate::algebra::presentation::{QuadraticPresentation, Variant};
use crate::algebra::GradedBasis;
use crate::rational::{rat_from_str, rat_to_string, Rat};
use crate::CACHE_FORMAT_VERSION;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("io error: {0}")]
    Io(#[from] io::Error),
    #[error("corrupt cache entry: {0}")]
    Corrupt(String),
}

#[derive(Debug, Serialize, Deserialize)]
struct CacheFile {
    schema: String,
    format_version: String,
    n: usize,
    variant: Variant,
    dims: Vec<usize>,
    degrees: Vec<CacheDegree>,
}

#[derive(Debug, Serialize, Deserialize)]
struct CacheDegree {
    degree: usize,
    basis: Vec<ExtMonomial>,
    /// `[monomial, [[basis_index, "p/q"], ...]]` rows for non-basis monomials.
    projection: Vec<(ExtMonomial, Vec<(u32, String)>)>,
}

pub fn cache_file_name(n: usize, variant: Variant) -> String {
    format!(
        "basis_{}_n{}_v{}.json",
        variant.as_str(),
        n,
        CACHE_FORMAT_VERSION
    )
}

pub fn cache_path(dir: &Path, n: usize, variant: Variant) -> PathBuf {
    dir.join(cache_file_name(n, variant))
}

/// Serializes a basis into the cache directory; returns the file path.
pub fn save_basis(dir: &Path, basis: &GradedBasis) -> Result<PathBuf, CacheError> {
    fs::create_dir_all(dir)?;
    let degrees = (0..basis.dims().len())
        .map(|q| {
            let data = basis.degree_data(q).expect("computed degree");
            CacheDegree {
                degree: q,
                basis: data.basis().to_vec(),
                projection: data
                    .projection_rows()
                    .iter()
                    .map(|(m, combo)| {
                        (
                            m.clone(),
                            combo.iter().map(|(k, c)| (*k, rat_to_string(c))).collect(),
                        )
                    })
                    .collect(),
            }
        })
        .collect();
    let file = CacheFile {
        schema: crate::SCHEMA_VERSION.to_string(),
        format_version: CACHE_FORMAT_VERSION.to_string(),
        n: basis.n(),
        variant: basis.variant(),
        dims: basis.dims().to_vec(),
        degrees,
    };
    let path = cache_path(dir, basis.n(), basis.variant());
    let tmp = path.with_extension("json.tmp");
    fs::write(
        &tmp,
        serde_json::to_string_pretty(&file).expect("serializable"),
    )?;
    fs::rename(&tmp, &path)?;
    Ok(path)
}

/// Loads and revalidates a cached basis. `Ok(None)` when no entry exists.
pub fn load_basis(
    dir: &Path,
    n: usize,
    variant: Variant,
) -> Result<Option<GradedBasis>, CacheError> {
    let path = cache_path(dir, n, variant);
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let file: CacheFile =
        serde_json::from_str(&text).map_err(|e| CacheError::Corrupt(e.to_string()))?;
    if file.format_version != CACHE_FORMAT_VERSION || file.n != n || file.variant != variant {
        return Err(CacheError::Corrupt("cache key mismatch".into()));
    }
    let pres =
        QuadraticPresentation::new(n, variant).map_err(|e| CacheError::Corrupt(e.to_string()))?;
    let mut parts = Vec::new();
    for d in file.degrees {
        let mut projection: BTreeMap<ExtMonomial, Vec<(u32, Rat)>> = BTreeMap::new();
        for (m, combo) in d.projection {
            let parsed: Option<Vec<(u32, Rat)>> = combo
                .into_iter()
                .map(|(k, s)| rat_from_str(&s).map(|r| (k, r)))
                .collect();
            let parsed = parsed.ok_or_else(|| CacheError::Corrupt("unparsable rational".into()))?;
            projection.insert(m, parsed);
        }
        parts.push((d.basis, projection));
    }
    GradedBasis::from_parts(&pres, file.dims, parts)
        .map(Some)
        .map_err(|e| CacheError::Corrupt(e.to_string()))
}

/// Loads the cached basis when present and valid, otherwise computes and
/// stores it. Corrupt entries are evicted and recomputed, never trusted.
pub fn load_or_compute(
    dir: &Path,
    pres: &QuadraticPresentation,
    tier: &crate::algebra::CapacityTier,
) -> Result<(GradedBasis, bool), crate::CoreError> {
    match load_basis(dir, pres.n(), pres.variant()) {
        Ok(Some(basis)) => return Ok((basis, true)),
        Ok(None) => {}
        Err(_) => {
            let _ = evict(dir, pres.n(), pres.variant());
        }
    }
    let basis = GradedBasis::compute(pres, tier)?;
    // Failure to persist is not fatal for the computation itself.
    let _ = save_basis(dir, &basis);
    Ok((basis, false))
}

#[derive(Debug, Clone, Serialize)]
pub struct CacheEntry {
    pub file: String,
    pub n: usize,
    pub variant: Variant,
    pub dims: Option<Vec<usize>>,
    pub valid: bool,
}

/// Lists cache entries in the directory, flagging unreadable ones.
pub fn list_entries(dir: &Path) -> Result<Vec<CacheEntry>, CacheError> {
    let mut out = Vec::new();
    let entries = match fs::read_dir(dir) {
        Ok(e) => e,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(out),
        Err(e) => return Err(e.into()),
    };
    for entry in entries {
        let entry = entry?;
        let name = entry.file_name().to_string_lossy().to_string();
        if !name.starts_with("basis_") || !name.ends_with(".json") {
            continue;
        }
        let parsed: Option<(usize, Variant)> = parse_file_name(&name);
        let Some((n, variant)) = parsed else { continue };
        match load_basis(dir, n, variant) {
            Ok(Some(b)) => out.push(CacheEntry {
                file: name,
                n,
                variant,
                dims: Some(b.dims().to_vec()),
                valid: true,
            }),
            _ => out.push(CacheEntry {
                file: name,
                n,
                variant,
                dims: None,
                valid: false,
            }),
        }
    }
    out.sort_by(|a, b| a.file.cmp(&b.file));
    Ok(out)
}

fn parse_file_name(name: &str) -> Option<(usize, Variant)> {
    let stem = name.strip_prefix("basis_")?.strip_suffix(".json")?;
    let mut parts = stem.split('_');
    let variant = match parts.next()? {
        "full" => Variant::Full,
        "plus" => Variant::Plus,
        _ => return None,
    };
    let n: usize = parts.next()?.strip_prefix('n')?.parse().ok()?;
    Some((n, variant))
}

/// Removes an entry; a missing entry is a no-op and reported as `false`.
pub fn evict(dir: &Path, n: usize, variant: Variant) -> Result<bool, CacheError> {
    let path = cache_path(dir, n, variant);
    match fs::remove_file(&path) {
        Ok(()) => Ok(true),
        Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(false),
        Err(e) => Err(e.into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{CapacityTier, Variant};

    fn compute(n: usize, variant: Variant) -> GradedBasis {
        let pres = QuadraticPresentation::new(n, variant).unwrap();
        GradedBasis::compute(&pres, &CapacityTier::default()).unwrap()
    }

    #[test]
    fn roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let basis = compute(3, Variant::Full);
        save_basis(dir.path(), &basis).unwrap();
        let loaded = load_basis(dir.path(), 3, Variant::Full).unwrap().unwrap();
        assert_eq!(loaded.dims(), basis.dims());
        for q in 0..=basis.top_degree() {
            assert_eq!(
                loaded.degree_data(q).unwrap().basis(),
                basis.degree_data(q).unwrap().basis()
            );
            assert_eq!(
                loaded.degree_data(q).unwrap().projection_rows(),
                basis.degree_data(q).unwrap().projection_rows()
            );
        }
    }

    #[test]
    fn missing_entry_is_none() {
        let dir = tempfile::tempdir().unwrap();
        assert!(load_basis(dir.path(), 3, Variant::Full).unwrap().is_none());
        assert!(!evict(dir.path(), 3, Variant::Full).unwrap());
        assert!(list_entries(dir.path()).unwrap().is_empty());
    }

    #[test]
    fn corrupt_entry_is_flagged_and_recomputed() {
        let dir = tempfile::tempdir().unwrap();
        let basis = compute(2, Variant::Plus);
        let path = save_basis(dir.path(), &basis).unwrap();
        fs::write(&path, "{not json").unwrap();
        assert!(matches!(
            load_basis(dir.path(), 2, Variant::Plus),
            Err(CacheError::Corrupt(_))
        ));
        let entries = list_entries(dir.path()).unwrap();
        assert_eq!(entries.len(), 1);
        assert!(!entries[0].valid);

        let pres = QuadraticPresentation::new(2, Variant::Plus).unwrap();
        let (recomputed, from_cache) =
            load_or_compute(dir.path(), &pres, &CapacityTier::default()).unwrap();
        assert!(!from_cache);
        assert_eq!(recomputed.dims(), basis.dims());
        // The corrupt file was replaced by a valid one.
        assert!(list_entries(dir.path()).unwrap()[0].valid);
    }

    #[test]
    fn cache_hit_after_compute() {
        let dir = tempfile::tempdir().unwrap();
        let pres = QuadraticPresentation::new(3, Variant::Plus).unwrap();
        let (_, hit1) = load_or_compute(dir.path(), &pres, &CapacityTier::default()).unwrap();
        assert!(!hit1);
        let (_, hit2) = load_or_compute(dir.path(), &pres, &CapacityTier::default()).unwrap();
        assert!(hit2);
    }
}
