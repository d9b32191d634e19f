//! Membership-function plots: one SVG 1.1 file per solution component,
//! x-axis = value, y-axis = membership level z in [0, 1].

use fsle::FuzzyNumber;

const WIDTH: f64 = 480.0;
const HEIGHT: f64 = 320.0;
const MARGIN_LEFT: f64 = 56.0;
const MARGIN_RIGHT: f64 = 24.0;
const MARGIN_TOP: f64 = 24.0;
const MARGIN_BOTTOM: f64 = 40.0;

/// Data-space polyline of a component's membership function. The lower
/// branch runs from (v̲(0), 0) up to (v̲(1), 1); the upper branch continues
/// from (v̄(1), 1) back down to (v̄(0), 0).
#[derive(Debug, Clone)]
pub struct MembershipPlot {
    /// 1-based component index.
    pub component: usize,
    /// (value, z) along the lower branch, z ascending.
    pub lower: Vec<(f64, f64)>,
    /// (value, z) along the upper branch, z descending.
    pub upper: Vec<(f64, f64)>,
}

impl MembershipPlot {
    pub fn from_fuzzy(component: usize, entry: &FuzzyNumber, grid: &[f64]) -> Self {
        let lower: Vec<(f64, f64)> = grid.iter().map(|&z| (entry.lower.at(z), z)).collect();
        let upper: Vec<(f64, f64)> =
            grid.iter().rev().map(|&z| (entry.upper.at(z), z)).collect();
        Self { component, lower, upper }
    }

    /// Apex values: (lower branch at z=1, upper branch at z=1). They
    /// coincide for a fuzzy number.
    pub fn apex(&self) -> (f64, f64) {
        (self.lower.last().unwrap().0, self.upper.first().unwrap().0)
    }

    pub fn to_svg(&self) -> String {
        let all = self.lower.iter().chain(&self.upper);
        let mut vmin = f64::INFINITY;
        let mut vmax = f64::NEG_INFINITY;
        for &(v, _) in all {
            vmin = vmin.min(v);
            vmax = vmax.max(v);
        }
        // a crisp singleton degenerates to a vertical spike; widen the axis
        // so the spike is visible
        if vmax - vmin < 1e-12 {
            vmin -= 1.0;
            vmax += 1.0;
        }
        let span = vmax - vmin;
        let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
        let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
        let x = |v: f64| MARGIN_LEFT + (v - vmin) / span * plot_w;
        let y = |z: f64| HEIGHT - MARGIN_BOTTOM - z * plot_h;

        let points: String = self
            .lower
            .iter()
            .chain(&self.upper)
            .map(|&(v, z)| format!("{:.2},{:.2}", x(v), y(z)))
            .collect::<Vec<_>>()
            .join(" ");

        let mut svg = String::new();
        svg.push_str(&format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
             width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
        ));
        svg.push_str(&format!(
            "  <rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>\n"
        ));
        // axes
        svg.push_str(&format!(
            "  <line x1=\"{l}\" y1=\"{b}\" x2=\"{r}\" y2=\"{b}\" stroke=\"black\"/>\n",
            l = MARGIN_LEFT,
            r = WIDTH - MARGIN_RIGHT,
            b = HEIGHT - MARGIN_BOTTOM
        ));
        svg.push_str(&format!(
            "  <line x1=\"{l}\" y1=\"{t}\" x2=\"{l}\" y2=\"{b}\" stroke=\"black\"/>\n",
            l = MARGIN_LEFT,
            t = MARGIN_TOP,
            b = HEIGHT - MARGIN_BOTTOM
        ));
        // axis labels: value range and the z = 0, 1 levels
        svg.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-size=\"12\">{}</text>\n",
            MARGIN_LEFT,
            HEIGHT - MARGIN_BOTTOM + 16.0,
            crate::render::fmt_sig(vmin)
        ));
        svg.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"end\">{}</text>\n",
            WIDTH - MARGIN_RIGHT,
            HEIGHT - MARGIN_BOTTOM + 16.0,
            crate::render::fmt_sig(vmax)
        ));
        svg.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"end\">0</text>\n",
            MARGIN_LEFT - 6.0,
            HEIGHT - MARGIN_BOTTOM + 4.0
        ));
        svg.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"end\">1</text>\n",
            MARGIN_LEFT - 6.0,
            MARGIN_TOP + 4.0
        ));
        svg.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-size=\"13\">v{}</text>\n",
            WIDTH / 2.0 - 8.0,
            HEIGHT - 8.0,
            self.component
        ));
        svg.push_str(&format!(
            "  <polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"{points}\"/>\n"
        ));
        svg.push_str("</svg>\n");
        svg
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fsle::{uniform_grid, AffineZ, FuzzyNumber};

    #[test]
    fn triangle_apex_and_shape() {
        // lower 1.375+0.625z, upper 2.875-0.875z: apex at 2.0
        let entry =
            FuzzyNumber::affine(AffineZ::new(1.375, 0.625), AffineZ::new(2.875, -0.875));
        let plot = MembershipPlot::from_fuzzy(1, &entry, &uniform_grid(101));
        let (lo, hi) = plot.apex();
        assert!((lo - 2.0).abs() < 1e-12);
        assert!((hi - 2.0).abs() < 1e-12);
        let svg = plot.to_svg();
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains("<polyline"));
        assert!(svg.contains("version=\"1.1\""));
    }

    #[test]
    fn crisp_singleton_is_a_spike() {
        let entry = FuzzyNumber::singleton(3.0);
        let plot = MembershipPlot::from_fuzzy(1, &entry, &uniform_grid(11));
        assert_eq!(plot.apex(), (3.0, 3.0));
        // every point sits at the same value: a vertical spike
        assert!(plot.lower.iter().chain(&plot.upper).all(|&(v, _)| v == 3.0));
        // the widened axis keeps the spike drawable
        assert!(plot.to_svg().contains("<polyline"));
    }
}
