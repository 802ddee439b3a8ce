//! Adaptive Simpson quadrature with an absolute error target.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    /// Sum of the Richardson error estimates `|S₂ - S₁| / 15` over accepted
    /// panels.
    pub error_estimate: f64,
    pub evaluations: usize,
    /// Whether some panel was accepted only because the depth limit was hit.
    pub depth_limited: bool,
}

struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
}

/// Integrates `f` over `[a, b]` to absolute tolerance `tol`, splitting at
/// most `max_depth` times along any branch.
pub fn adaptive_simpson<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, tol: f64, max_depth: usize) -> Quadrature {
    let mut out = Quadrature {
        value: 0.0,
        error_estimate: 0.0,
        evaluations: 3,
        depth_limited: false,
    };
    if b == a {
        out.evaluations = 0;
        return out;
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    // Explicit stack, left panel processed first so the summation order is fixed.
    let mut stack = vec![(
        Panel {
            a,
            b,
            fa,
            fm,
            fb,
            whole,
        },
        tol,
        max_depth,
    )];
    while let Some((p, eps, depth)) = stack.pop() {
        let m = 0.5 * (p.a + p.b);
        let lm = 0.5 * (p.a + m);
        let rm = 0.5 * (m + p.b);
        let (flm, frm) = (f(lm), f(rm));
        out.evaluations += 2;
        let left = (m - p.a) / 6.0 * (p.fa + 4.0 * flm + p.fm);
        let right = (p.b - m) / 6.0 * (p.fm + 4.0 * frm + p.fb);
        let delta = left + right - p.whole;
        if delta.abs() <= 15.0 * eps || depth == 0 {
            if depth == 0 && delta.abs() > 15.0 * eps {
                out.depth_limited = true;
            }
            out.value += left + right + delta / 15.0;
            out.error_estimate += delta.abs() / 15.0;
        } else {
            stack.push((
                Panel {
                    a: m,
                    b: p.b,
                    fa: p.fm,
                    fm: frm,
                    fb: p.fb,
                    whole: right,
                },
                0.5 * eps,
                depth - 1,
            ));
            stack.push((
                Panel {
                    a: p.a,
                    b: m,
                    fa: p.fa,
                    fm: flm,
                    fb: p.fm,
                    whole: left,
                },
                0.5 * eps,
                depth - 1,
            ));
        }
    }
    out
}
