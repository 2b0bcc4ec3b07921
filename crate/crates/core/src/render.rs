//! Deterministic text-page rendering with the embedded bitmap font.
//!
//! Pages are US Letter at the requested dpi, grayscale, black glyphs on a
//! white ground, with half-inch margins and a fixed monospaced grid. The
//! same glyph-scaling function drives both this renderer and the mock OCR
//! templates, so a clean render is exactly recoverable.

use thiserror::Error;

use crate::font::{self, FontSpec};
use crate::metrics::normalize_text;
use crate::raster::Image;

#[derive(Debug, Error)]
pub enum RenderError {
    #[error("text is empty after normalization")]
    EmptyText,
    #[error("dpi {0} outside supported range 72..=600")]
    DpiOutOfRange(u32),
    #[error("text needs {needed} grid rows but the page has {available}")]
    DoesNotFit { needed: usize, available: usize },
    #[error("page geometry degenerate at dpi {dpi}: {detail}")]
    Geometry { dpi: u32, detail: String },
}

/// A rendered page plus non-fatal findings (unsupported codepoints).
#[derive(Clone, Debug)]
pub struct RenderedPage {
    pub image: Image,
    pub warnings: Vec<String>,
}

/// US Letter page dimensions in pixels at the given dpi.
pub fn page_dims(dpi: u32) -> (usize, usize) {
    let w = (8.5 * dpi as f64).floor() as usize;
    let h = 11 * dpi as usize;
    (w, h)
}

/// Page margin in pixels: half an inch on every side.
pub fn page_margin(dpi: u32) -> usize {
    dpi as usize / 2
}

/// Grid capacity of a page: `(columns, rows)`.
pub fn grid_dims(dpi: u32, spec: &FontSpec) -> Result<(usize, usize), RenderError> {
    let (pw, ph) = page_dims(dpi);
    let margin = page_margin(dpi);
    let (cw, ch) = spec.cell_dims(dpi);
    let cols = (pw - 2 * margin) / cw;
    let rows = (ph - 2 * margin) / ch;
    if cols == 0 || rows == 0 {
        return Err(RenderError::Geometry {
            dpi,
            detail: format!("cell {}x{} leaves a {}x{} grid", cw, ch, cols, rows),
        });
    }
    Ok((cols, rows))
}

/// Renders `text` onto a fresh page. Lines split on LF/CRLF/CR; tabs
/// become one space cell; lines wider than the grid hard-wrap. Codepoints
/// outside printable ASCII render as the replacement box and are reported
/// in the warning list.
pub fn render_text_page(text: &str, dpi: u32, spec: &FontSpec) -> Result<RenderedPage, RenderError> {
    if !(72..=600).contains(&dpi) {
        return Err(RenderError::DpiOutOfRange(dpi));
    }
    if normalize_text(text).is_empty() {
        return Err(RenderError::EmptyText);
    }
    let (pw, ph) = page_dims(dpi);
    let margin = page_margin(dpi);
    let (cw, ch) = spec.cell_dims(dpi);
    let (cols, rows) = grid_dims(dpi, spec)?;

    // Lay out first so an oversized text fails before any drawing.
    let mut cells: Vec<(usize, usize, char)> = Vec::new();
    let mut warnings = Vec::new();
    let mut row = 0usize;
    let unified = text.replace("\r\n", "\n").replace('\r', "\n");
    for (line_no, line) in unified.split('\n').enumerate() {
        let mut col = 0usize;
        for ch_raw in line.chars() {
            let ch_cell = if ch_raw == '\t' { ' ' } else { ch_raw };
            if col == cols {
                col = 0;
                row += 1;
            }
            if font::glyph_bitmap(spec, ch_cell).is_none() {
                warnings.push(format!(
                    "line {}, column {}: unsupported codepoint U+{:04X} rendered as replacement box",
                    line_no + 1,
                    col + 1,
                    ch_cell as u32
                ));
            }
            cells.push((row, col, ch_cell));
            col += 1;
        }
        row += 1;
    }
    let needed = cells.iter().map(|&(r, _, _)| r + 1).max().unwrap_or(0);
    if needed > rows {
        return Err(RenderError::DoesNotFit {
            needed,
            available: rows,
        });
    }

    let mut image = Image::filled(pw, ph, 1, 255).expect("page geometry is valid");
    image.dpi = Some(dpi);
    for (r, c, ch_cell) in cells {
        let bitmap = font::glyph_bitmap(spec, ch_cell).unwrap_or_else(font::replacement_bitmap);
        let x0 = margin + c * cw;
        let y0 = margin + r * ch;
        for gy in 0..ch {
            for gx in 0..cw {
                if font::scaled_bit(bitmap, cw, ch, gx, gy) {
                    image.set_sample(x0 + gx, y0 + gy, 0, 0);
                }
            }
        }
    }
    Ok(RenderedPage { image, warnings })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn page_is_us_letter_at_dpi() {
        let page = render_text_page("hello", 200, &FontSpec::default()).unwrap();
        assert_eq!(page.image.width(), 1700);
        assert_eq!(page.image.height(), 2200);
        assert_eq!(page.image.channels(), 1);
        assert_eq!(page.image.dpi, Some(200));
        assert!(page.warnings.is_empty());
    }

    #[test]
    fn rejects_empty_and_out_of_range_inputs() {
        let spec = FontSpec::default();
        assert!(matches!(
            render_text_page("   \n\t ", 200, &spec),
            Err(RenderError::EmptyText)
        ));
        assert!(matches!(
            render_text_page("x", 71, &spec),
            Err(RenderError::DpiOutOfRange(71))
        ));
        assert!(matches!(
            render_text_page("x", 601, &spec),
            Err(RenderError::DpiOutOfRange(601))
        ));
    }

    #[test]
    fn unsupported_codepoints_warn_and_render_replacement() {
        let page = render_text_page("caf\u{00e9}", 200, &FontSpec::default()).unwrap();
        assert_eq!(page.warnings.len(), 1);
        assert!(page.warnings[0].contains("U+00E9"));
    }

    #[test]
    fn rendering_is_deterministic() {
        let a = render_text_page("The 39 steps.", 230, &FontSpec::default()).unwrap();
        let b = render_text_page("The 39 steps.", 230, &FontSpec::default()).unwrap();
        assert_eq!(a.image.data(), b.image.data());
    }

    #[test]
    fn double_dpi_doubles_glyph_pixels_exactly() {
        // Nearest-neighbor contract: the 144-dpi render of a cell is the
        // 72-dpi render with every pixel duplicated 2x2.
        let spec = FontSpec::default();
        let lo = render_text_page("AB", 72, &spec).unwrap().image;
        let hi = render_text_page("AB", 144, &spec).unwrap().image;
        let (m_lo, m_hi) = (page_margin(72), page_margin(144));
        let (cw, ch) = spec.cell_dims(72);
        for y in 0..ch * 2 * 2 {
            for x in 0..cw * 2 * 2 {
                assert_eq!(
                    hi.sample(m_hi + x, m_hi + y, 0),
                    lo.sample(m_lo + x / 2, m_lo + y / 2, 0),
                    "at ({x},{y})"
                );
            }
        }
    }

    #[test]
    fn long_lines_hard_wrap() {
        let spec = FontSpec::default();
        let (cols, _) = grid_dims(200, &spec).unwrap();
        let long = "x".repeat(cols + 3);
        let page = render_text_page(&long, 200, &spec).unwrap().image;
        let margin = page_margin(200);
        let (cw, ch) = spec.cell_dims(200);
        // Row 0 ends with ink in its last column cell; row 1 starts with
        // ink in its first cell.
        let has_ink = |col: usize, row: usize| {
            let x0 = margin + col * cw;
            let y0 = margin + row * ch;
            (0..ch).any(|gy| (0..cw).any(|gx| page.sample(x0 + gx, y0 + gy, 0) == 0))
        };
        assert!(has_ink(cols - 1, 0));
        assert!(has_ink(0, 1));
        assert!(has_ink(2, 1));
        assert!(!has_ink(3, 1));
    }

    #[test]
    fn oversized_text_is_rejected() {
        let spec = FontSpec::default();
        let (_, rows) = grid_dims(200, &spec).unwrap();
        let tall = vec!["line"; rows + 1].join("\n");
        assert!(matches!(
            render_text_page(&tall, 200, &spec),
            Err(RenderError::DoesNotFit { .. })
        ));
    }

    #[test]
    fn tabs_render_as_blank_cells() {
        let spec = FontSpec::default();
        let a = render_text_page("a\tb", 200, &spec).unwrap().image;
        let b = render_text_page("a b", 200, &spec).unwrap().image;
        assert_eq!(a.data(), b.data());
    }

    #[test]
    fn crlf_and_lf_agree() {
        let spec = FontSpec::default();
        let a = render_text_page("one\r\ntwo\rthree", 200, &spec).unwrap().image;
        let b = render_text_page("one\ntwo\nthree", 200, &spec).unwrap().image;
        assert_eq!(a.data(), b.data());
    }
}
