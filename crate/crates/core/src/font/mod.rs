//! Embedded bitmap font: fixed-cell monospaced glyphs for printable ASCII,
//! in normal and bold weights, plus a replacement box for anything else.
//!
//! Glyphs are stored as one bitmask row per cell line, LSB = leftmost
//! pixel, rasterized at the 72-dpi base cell. Larger sizes are produced by
//! nearest-neighbor scaling, which keeps rendering and the mock OCR's
//! template matcher in exact agreement at every dpi. Every glyph keeps its
//! outermost row and column empty, so rendered text always has ink-free
//! separator lines between grid cells.

mod data;

pub use data::{CELL_H, CELL_W};

/// Which embedded variant to rasterize with.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FontSpec {
    pub bold: bool,
    /// Integer size multiplier on the base cell, applied before dpi
    /// scaling. 1 is the regular text size.
    pub size: u32,
}

impl Default for FontSpec {
    fn default() -> Self {
        FontSpec { bold: false, size: 1 }
    }
}

impl FontSpec {
    pub fn bold() -> Self {
        FontSpec { bold: true, size: 1 }
    }

    /// Cell size in pixels at the given dpi: `base · size · dpi / 72`,
    /// floored per axis.
    pub fn cell_dims(&self, dpi: u32) -> (usize, usize) {
        let s = self.size.max(1) as usize;
        let w = CELL_W * s * dpi as usize / 72;
        let h = CELL_H * s * dpi as usize / 72;
        (w, h)
    }
}

/// First and last printable ASCII codepoints covered by the font.
pub const FIRST_CHAR: char = ' ';
pub const LAST_CHAR: char = '~';
pub const GLYPH_COUNT: usize = 95;

/// Base bitmap for a printable ASCII character, or `None` outside coverage.
pub fn glyph_bitmap(spec: &FontSpec, ch: char) -> Option<&'static [u16; CELL_H]> {
    let code = ch as u32;
    if !(FIRST_CHAR as u32..=LAST_CHAR as u32).contains(&code) {
        return None;
    }
    let idx = (code - FIRST_CHAR as u32) as usize;
    Some(if spec.bold {
        &data::GLYPHS_BOLD[idx]
    } else {
        &data::GLYPHS_NORMAL[idx]
    })
}

/// The hollow box drawn for unsupported codepoints.
pub fn replacement_bitmap() -> &'static [u16; CELL_H] {
    &data::GLYPH_REPLACEMENT
}

/// Tests one pixel of a glyph nearest-neighbor scaled to `cw`x`ch`.
/// Coordinates map back to the base cell by integer truncation, so an
/// exact multiple of the base size duplicates pixels exactly.
#[inline]
pub fn scaled_bit(bitmap: &[u16; CELL_H], cw: usize, ch: usize, x: usize, y: usize) -> bool {
    debug_assert!(x < cw && y < ch);
    let sx = x * CELL_W / cw;
    let sy = y * CELL_H / ch;
    (bitmap[sy] >> sx) & 1 == 1
}

/// A glyph scaled to a concrete cell size with rows packed into 64-bit
/// words, the shape the mock OCR's Hamming matcher consumes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackedGlyph {
    pub width: usize,
    pub height: usize,
    /// `height · words_per_row` words, row-major, bit `x % 64` of word
    /// `x / 64` is the pixel at column `x`.
    pub words: Vec<u64>,
    pub ink: u32,
}

impl PackedGlyph {
    pub fn words_per_row(&self) -> usize {
        self.width.div_ceil(64)
    }
}

/// Rasterizes a base bitmap to the packed cell representation.
pub fn pack_scaled(bitmap: &[u16; CELL_H], cw: usize, ch: usize) -> PackedGlyph {
    let wpr = cw.div_ceil(64);
    let mut words = vec![0u64; ch * wpr];
    let mut ink = 0;
    for y in 0..ch {
        for x in 0..cw {
            if scaled_bit(bitmap, cw, ch, x, y) {
                words[y * wpr + x / 64] |= 1u64 << (x % 64);
                ink += 1;
            }
        }
    }
    PackedGlyph {
        width: cw,
        height: ch,
        words,
        ink,
    }
}

/// All 95 printable-ASCII glyphs packed at one cell size, in codepoint
/// order. Index 0 is the space character.
pub fn pack_charset(spec: &FontSpec, cw: usize, ch: usize) -> Vec<PackedGlyph> {
    (FIRST_CHAR as u32..=LAST_CHAR as u32)
        .map(|c| {
            let bitmap = glyph_bitmap(spec, char::from_u32(c).expect("ascii")).expect("covered");
            pack_scaled(bitmap, cw, ch)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coverage_is_printable_ascii() {
        let spec = FontSpec::default();
        for c in 0x20u8..=0x7e {
            assert!(glyph_bitmap(&spec, c as char).is_some(), "{}", c as char);
        }
        assert!(glyph_bitmap(&spec, '\n').is_none());
        assert!(glyph_bitmap(&spec, 'é').is_none());
        assert!(glyph_bitmap(&spec, '\u{7f}').is_none());
    }

    #[test]
    fn space_is_blank_and_text_glyphs_have_ink() {
        for spec in [FontSpec::default(), FontSpec::bold()] {
            let packed = pack_charset(&spec, CELL_W, CELL_H);
            assert_eq!(packed[0].ink, 0, "space must be empty");
            for (i, g) in packed.iter().enumerate().skip(1) {
                assert!(g.ink > 0, "glyph {} blank", (i as u8 + 0x20) as char);
            }
        }
    }

    #[test]
    fn glyphs_are_pairwise_distinct_at_base_and_scaled_size() {
        for (cw, ch) in [(CELL_W, CELL_H), (33, 55)] {
            let packed = pack_charset(&FontSpec::default(), cw, ch);
            for i in 0..packed.len() {
                for j in (i + 1)..packed.len() {
                    assert_ne!(
                        packed[i].words, packed[j].words,
                        "glyphs {:?} and {:?} collide at {}x{}",
                        (i as u8 + 0x20) as char,
                        (j as u8 + 0x20) as char,
                        cw,
                        ch
                    );
                }
            }
        }
    }

    #[test]
    fn padding_row_and_column_survive_scaling() {
        // Grid detection depends on ink-free separators at every cell
        // boundary, at any cell size the dpi range can produce.
        let spec = FontSpec::default();
        for dpi in [72u32, 144, 200, 260, 600] {
            let (cw, ch) = spec.cell_dims(dpi);
            for c in 0x20u8..=0x7e {
                let bm = glyph_bitmap(&spec, c as char).unwrap();
                for x in 0..cw {
                    assert!(!scaled_bit(bm, cw, ch, x, 0));
                    assert!(!scaled_bit(bm, cw, ch, x, ch - 1));
                }
                for y in 0..ch {
                    assert!(!scaled_bit(bm, cw, ch, 0, y));
                    assert!(!scaled_bit(bm, cw, ch, cw - 1, y));
                }
            }
        }
    }

    #[test]
    fn double_dpi_duplicates_pixels_exactly() {
        let bm = glyph_bitmap(&FontSpec::default(), 'A').unwrap();
        for y in 0..CELL_H * 2 {
            for x in 0..CELL_W * 2 {
                assert_eq!(
                    scaled_bit(bm, CELL_W * 2, CELL_H * 2, x, y),
                    scaled_bit(bm, CELL_W, CELL_H, x / 2, y / 2)
                );
            }
        }
    }

    #[test]
    fn cell_dims_follow_dpi() {
        let spec = FontSpec::default();
        assert_eq!(spec.cell_dims(72), (CELL_W, CELL_H));
        assert_eq!(spec.cell_dims(144), (CELL_W * 2, CELL_H * 2));
        assert_eq!(spec.cell_dims(200), (CELL_W * 200 / 72, CELL_H * 200 / 72));
        let big = FontSpec { bold: false, size: 2 };
        assert_eq!(big.cell_dims(72), (CELL_W * 2, CELL_H * 2));
    }

    #[test]
    fn packing_matches_scaled_bits() {
        let bm = glyph_bitmap(&FontSpec::default(), 'Q').unwrap();
        let g = pack_scaled(bm, 70, 30);
        assert_eq!(g.words_per_row(), 2);
        for y in 0..30 {
            for x in 0..70 {
                let bit = (g.words[y * 2 + x / 64] >> (x % 64)) & 1 == 1;
                assert_eq!(bit, scaled_bit(bm, 70, 30, x, y));
            }
        }
    }
}
