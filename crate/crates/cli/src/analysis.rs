//! Everything reported about one curve: discriminant, its square root,
//! 2-torsion, the mod-2 image and the torsion subgroup.

use num_traits::Signed;
use serde::Serialize;
use sqdisc_core::algebra::rational_is_square;
use sqdisc_core::curves::long_to_short;
use sqdisc_core::galois2::{mod2_image, two_torsion_order};
use sqdisc_core::torsion::torsion_subgroup;
use sqdisc_core::{LongModel, Mod2Image, Point, Rat, Result, ShortModel, TorsionShape};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ModelJson {
    pub a: [String; 5],
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ShortJson {
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
}

/// Serialized form; big integers are decimal strings.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CurveReport {
    pub model: ModelJson,
    pub short_model: ShortJson,
    pub discriminant: String,
    pub discriminant_is_square: bool,
    pub sqrt_discriminant: Option<String>,
    pub two_torsion_order: u32,
    pub mod2_image: String,
    pub torsion: String,
    pub witnesses: Vec<[String; 2]>,
}

/// Typed result behind [`CurveReport`].
#[derive(Clone, Debug)]
pub struct Analysis {
    pub model: LongModel,
    pub short: ShortModel,
    pub discriminant: Rat,
    pub sqrt_discriminant: Option<Rat>,
    pub two_torsion_order: u32,
    pub image: Mod2Image,
    pub torsion: TorsionShape,
    pub witnesses: Vec<Point>,
}

impl Analysis {
    pub fn is_square(&self) -> bool {
        self.sqrt_discriminant.is_some()
    }

    pub fn report(&self) -> CurveReport {
        let a = self.model.a_invariants().map(|c| c.to_string());
        CurveReport {
            model: ModelJson { a },
            short_model: ShortJson { a: self.short.a().to_string(), b: self.short.b().to_string() },
            discriminant: self.discriminant.to_string(),
            discriminant_is_square: self.is_square(),
            sqrt_discriminant: self.sqrt_discriminant.as_ref().map(Rat::to_string),
            two_torsion_order: self.two_torsion_order,
            mod2_image: self.image.to_string(),
            torsion: self.torsion.to_string(),
            witnesses: self
                .witnesses
                .iter()
                .filter_map(|p| Some([p.x()?.to_string(), p.y()?.to_string()]))
                .collect(),
        }
    }

    pub fn text(&self) -> String {
        let r = self.report();
        let mut out = format!(
            "model        [{}]\nshort model  Y^2 = X^3 + ({})X + ({})\ndiscriminant {}\n",
            r.model.a.join(", "),
            r.short_model.a,
            r.short_model.b,
            r.discriminant
        );
        match &r.sqrt_discriminant {
            Some(s) => out += &format!("square       yes (sqrt {s})\n"),
            None => out += "square       no\n",
        }
        out += &format!(
            "#E(Q)[2]     {}\nmod-2 image  {}\ntorsion      {}\n",
            r.two_torsion_order, r.mod2_image, r.torsion
        );
        for [x, y] in &r.witnesses {
            out += &format!("generator    ({x}, {y}) on the short model\n");
        }
        out
    }
}

/// Squareness is read off the input model's discriminant; the short model
/// differs by a twelfth power, so the answer is the same.
pub fn analyze(model: &LongModel) -> Result<Analysis> {
    let short = long_to_short(model)?;
    let discriminant = model.discriminant();
    let sqrt_discriminant = rational_is_square(&discriminant).map(|r| r.abs());
    let group = torsion_subgroup(&short)?;
    Ok(Analysis {
        model: model.clone(),
        two_torsion_order: two_torsion_order(&short),
        image: mod2_image(&short),
        torsion: group.shape,
        witnesses: group.generators,
        short,
        discriminant,
        sqrt_discriminant,
    })
}

pub fn analyze_short(e: &ShortModel) -> Result<Analysis> {
    analyze(&e.to_long())
}

/// The summary table: non-cyclic groups have square discriminant and
/// trivial image; `C2, C4, C6, C8, C10, C12` have nonsquare discriminant
/// and image `C2`; `C5, C7, C9` have nonsquare discriminant and image `S3`;
/// trivial and `C3` have image `C3` exactly when the discriminant is a
/// square, and `S3` otherwise.
pub fn table_row_consistent(shape: TorsionShape, square: bool, image: Mod2Image) -> bool {
    match shape {
        TorsionShape::Product(_) => square && image == Mod2Image::Id,
        TorsionShape::Cyclic(n) if n % 2 == 0 => !square && image == Mod2Image::C2,
        TorsionShape::Cyclic(5 | 7 | 9) => !square && image == Mod2Image::S3,
        TorsionShape::Cyclic(_) => {
            let expected = if square { Mod2Image::C3 } else { Mod2Image::S3 };
            image == expected
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn short(a: i64, b: i64) -> Analysis {
        analyze_short(&ShortModel::new(a, b).unwrap()).unwrap()
    }

    #[test]
    fn worked_examples() {
        let cases = [
            ((-1, 0), Mod2Image::Id, "C2xC2"),
            ((0, 1), Mod2Image::C2, "C6"),
            ((0, 2), Mod2Image::S3, "C1"),
            ((-81, 243), Mod2Image::C3, "C1"),
        ];
        for ((a, b), image, torsion) in cases {
            let r = short(a, b);
            assert_eq!(r.image, image);
            assert_eq!(r.torsion.to_string(), torsion);
            assert!(table_row_consistent(r.torsion, r.is_square(), r.image));
        }
        assert_eq!(short(-1, 0).report().sqrt_discriminant.as_deref(), Some("8"));
    }

    #[test]
    fn table_rule_rejects_mismatches() {
        assert!(!table_row_consistent(TorsionShape::Product(2), false, Mod2Image::Id));
        assert!(!table_row_consistent(TorsionShape::Cyclic(5), false, Mod2Image::C2));
        assert!(!table_row_consistent(TorsionShape::Cyclic(3), true, Mod2Image::S3));
        assert!(table_row_consistent(TorsionShape::Cyclic(3), true, Mod2Image::C3));
        assert!(table_row_consistent(TorsionShape::Cyclic(12), false, Mod2Image::C2));
    }
}
