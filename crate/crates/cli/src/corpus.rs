//! Bundled example algebras, or `*.alg` files from an override directory.

use std::path::Path;

/// `(file stem, contents)`, in report order.
pub const BUNDLED: [(&str, &str); 10] = [
    ("semisimple", include_str!("../corpus/semisimple.alg")),
    ("a2", include_str!("../corpus/a2.alg")),
    ("a3", include_str!("../corpus/a3.alg")),
    ("truncated-x2", include_str!("../corpus/truncated-x2.alg")),
    ("truncated-x3", include_str!("../corpus/truncated-x3.alg")),
    ("nakayama-linear-3", include_str!("../corpus/nakayama-linear-3.alg")),
    ("nakayama-cyclic-3", include_str!("../corpus/nakayama-cyclic-3.alg")),
    ("auslander-x2", include_str!("../corpus/auslander-x2.alg")),
    ("auslander-x3", include_str!("../corpus/auslander-x3.alg")),
    ("commutative-square", include_str!("../corpus/commutative-square.alg")),
];

pub const CORPUS_DIR_VAR: &str = "AGTILT_CORPUS_DIR";

pub fn bundled(stem: &str) -> Option<&'static str> {
    BUNDLED.iter().find(|(s, _)| *s == stem).map(|(_, text)| *text)
}

/// Bundled files, or every `*.alg` in `dir` sorted by file name.
pub fn load(dir: Option<&Path>) -> std::io::Result<Vec<(String, String)>> {
    let Some(dir) = dir else {
        return Ok(BUNDLED.iter().map(|(s, t)| (s.to_string(), t.to_string())).collect());
    };
    let mut paths: Vec<_> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|e| e == "alg"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let stem = p.file_stem().unwrap_or_default().to_string_lossy().into_owned();
            Ok((stem, std::fs::read_to_string(&p)?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_algebra_file;

    #[test]
    fn every_bundled_file_parses_and_builds() {
        for (stem, text) in BUNDLED {
            let f = parse_algebra_file(text).unwrap_or_else(|e| panic!("{stem}: {e}"));
            f.build(101, 30).unwrap_or_else(|e| panic!("{stem}: {e}"));
        }
    }

    #[test]
    fn bundled_auslander_algebras_match_the_library_builders() {
        use agtilt::examples::{auslander_dual_numbers, auslander_truncated_cubic};
        let x2 = parse_algebra_file(bundled("auslander-x2").unwrap()).unwrap().build(101, 30).unwrap();
        let x3 = parse_algebra_file(bundled("auslander-x3").unwrap()).unwrap().build(101, 30).unwrap();
        assert_eq!(x2.dim(), auslander_dual_numbers(101).dim());
        assert_eq!(x3.dim(), auslander_truncated_cubic(101).dim());
    }
}
