//! Hand-rolled SVG heatmap for decade-by-decade correlation matrices.
//!
//! No plotting dependency: the output is a plain `<svg>` with one `<rect>`
//! and one `<text>` per cell. Colors come from a linear two-color ramp over
//! [−1, 1], so block structure in the matrix is visible at a glance.

use crate::temporal::CorrelationMatrix;

/// Appearance knobs for [`correlation_heatmap`].
#[derive(Debug, Clone)]
pub struct HeatmapStyle {
    /// Side length of one cell in pixels.
    pub cell: f64,
    /// Left/top margin reserved for axis labels, in pixels.
    pub margin: f64,
    pub font_size: f64,
    /// Color at correlation −1.
    pub low_color: (u8, u8, u8),
    /// Color at correlation +1.
    pub high_color: (u8, u8, u8),
    /// Optional title drawn above the grid.
    pub title: Option<String>,
}

impl Default for HeatmapStyle {
    fn default() -> Self {
        HeatmapStyle {
            cell: 56.0,
            margin: 64.0,
            font_size: 13.0,
            low_color: (33, 102, 172),
            high_color: (178, 24, 43),
            title: None,
        }
    }
}

fn lerp(a: u8, b: u8, t: f64) -> u8 {
    (a as f64 + (b as f64 - a as f64) * t).round().clamp(0.0, 255.0) as u8
}

/// Linear interpolation between the two ramp colors; `value` clamped to [−1, 1].
fn ramp(style: &HeatmapStyle, value: f64) -> (u8, u8, u8) {
    let t = ((value.clamp(-1.0, 1.0)) + 1.0) / 2.0;
    (
        lerp(style.low_color.0, style.high_color.0, t),
        lerp(style.low_color.1, style.high_color.1, t),
        lerp(style.low_color.2, style.high_color.2, t),
    )
}

/// Black text on light cells, white on dark ones (Rec. 601 luma).
fn text_color(rgb: (u8, u8, u8)) -> &'static str {
    let luma = 0.299 * rgb.0 as f64 + 0.587 * rgb.1 as f64 + 0.114 * rgb.2 as f64;
    if luma < 140.0 {
        "#ffffff"
    } else {
        "#000000"
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Render the matrix as an SVG heatmap with the correlation value printed in
/// every cell. Output is deterministic for a given matrix and style.
pub fn correlation_heatmap(matrix: &CorrelationMatrix, style: &HeatmapStyle) -> String {
    let n = matrix.len();
    let title_pad = if style.title.is_some() { 28.0 } else { 0.0 };
    let width = style.margin + n as f64 * style.cell + 8.0;
    let height = title_pad + style.margin + n as f64 * style.cell + 8.0;

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{height:.0}\" \
         viewBox=\"0 0 {width:.0} {height:.0}\">\n"
    ));
    out.push_str(
        "<g font-family=\"Helvetica, Arial, sans-serif\" \
         text-anchor=\"middle\" dominant-baseline=\"central\">\n",
    );
    if let Some(title) = &style.title {
        out.push_str(&format!(
            "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"{:.1}\" font-weight=\"bold\">{}</text>\n",
            width / 2.0,
            title_pad / 2.0 + 4.0,
            style.font_size + 2.0,
            escape(title)
        ));
    }

    let x0 = style.margin;
    let y0 = title_pad + style.margin;

    // Axis labels.
    for (i, label) in matrix.labels.iter().enumerate() {
        let center = i as f64 * style.cell + style.cell / 2.0;
        out.push_str(&format!(
            "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"{:.1}\">{}</text>\n",
            x0 + center,
            y0 - style.font_size,
            style.font_size,
            label
        ));
        out.push_str(&format!(
            "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"{:.1}\">{}</text>\n",
            x0 - style.font_size * 1.8,
            y0 + center,
            style.font_size,
            label
        ));
    }

    // Cells.
    for i in 0..n {
        for j in 0..n {
            let v = matrix.get(i, j);
            let rgb = ramp(style, v);
            let x = x0 + j as f64 * style.cell;
            let y = y0 + i as f64 * style.cell;
            out.push_str(&format!(
                "<rect x=\"{x:.1}\" y=\"{y:.1}\" width=\"{:.1}\" height=\"{:.1}\" \
                 fill=\"#{:02x}{:02x}{:02x}\" stroke=\"#ffffff\" stroke-width=\"1\"/>\n",
                style.cell, style.cell, rgb.0, rgb.1, rgb.2
            ));
            out.push_str(&format!(
                "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"{:.1}\" fill=\"{}\">{:.2}</text>\n",
                x + style.cell / 2.0,
                y + style.cell / 2.0,
                style.font_size,
                text_color(rgb),
                v
            ));
        }
    }
    out.push_str("</g>\n</svg>\n");
    out
}
