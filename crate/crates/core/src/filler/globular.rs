//! Globular filler: a parallel pair of degenerate globs is filled by its
//! image under the reflexivity map.

use alloc::format;

use super::{check_shape, violation, ConstructiveFill, FillError, FillResult, Sphere, TraceStep};
use crate::complex::SkeletalComplex;
use crate::shape::{Globe, GlobeGen};

impl ConstructiveFill for Globe {
    fn constructive_fill(
        x: &SkeletalComplex<Globe>,
        sphere: &Sphere<Globe>,
    ) -> Result<FillResult<Globe>, FillError> {
        check_shape(sphere)?;
        let (src, tgt) = (sphere.faces[0], sphere.faces[1]);
        if !src.is_degenerate() || !tgt.is_degenerate() {
            return Ok(FillResult::not_applicable(
                "a face is non-degenerate".into(),
            ));
        }
        if src != tgt {
            return Err(violation(format!(
                "parallel degenerate globs differ: {} ≠ {}",
                x.cell_literal(&src),
                x.cell_literal(&tgt)
            )));
        }
        let filler = x.act_word(&src, &[GlobeGen::Refl])?;
        let faces = x.faces(&filler)?;
        if faces != sphere.faces {
            return Err(violation(
                "boundary of the reflexive image differs from the sphere".into(),
            ));
        }
        let trace = alloc::vec![
            TraceStep {
                face: "source".into(),
                branch: "ι then σ is the identity".into(),
            },
            TraceStep {
                face: "target".into(),
                branch: "ι then τ is the identity".into(),
            },
        ];
        Ok(FillResult::filled(filler, None, trace))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filler::{boundary, FillStatus};
    use alloc::vec;

    #[test]
    fn degenerate_pairs_fill_by_reflexivity() {
        let mut x: SkeletalComplex<Globe> = SkeletalComplex::new(1, 4).unwrap();
        let v = x.add_generator("v", 0, vec![]).unwrap();
        let w = x.add_generator("w", 0, vec![]).unwrap();
        x.add_generator("e", 1, vec![x.nondegenerate(v), x.nondegenerate(w)])
            .unwrap();
        for k in 3..=4 {
            for c in x.cells_of_dim(k) {
                let s = boundary(&x, &c).unwrap();
                let got = Globe::constructive_fill(&x, &s).unwrap();
                assert_eq!(got.status, FillStatus::Filled);
                assert_eq!(got.filler, Some(c));
            }
        }
    }
}
