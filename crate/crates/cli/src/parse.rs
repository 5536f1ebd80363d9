//! Value parsers for command-line flags.

use skewschur::overlay::Level;
use skewschur::{Partition, SkewShape, StripSpec};

fn numbers<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| format!("`{t}` is not a valid number")))
        .collect()
}

/// `"a,b,c"`, possibly empty.
pub fn partition(s: &str) -> Result<Partition, String> {
    Partition::new(numbers::<i64>(s)?).map_err(|e| e.to_string())
}

/// `"a,b,c/d,e"`; the inner part may be empty and the slash omitted.
pub fn shape(s: &str) -> Result<SkewShape, String> {
    let (outer, inner) = s.split_once('/').unwrap_or((s, ""));
    SkewShape::new(partition(outer)?, partition(inner)?).map_err(|e| e.to_string())
}

/// `"1,2,0"`.
pub fn point(s: &str) -> Result<Vec<i64>, String> {
    numbers(s)
}

/// `"x,level"` with level `top`/`bottom`, or `t`/`b`.
pub fn coloured_point(s: &str) -> Result<(i64, Level), String> {
    let (x, level) = s.split_once(',').ok_or_else(|| format!("expected `x,level`, got `{s}`"))?;
    let x = x.trim().parse().map_err(|_| format!("`{x}` is not an integer"))?;
    let level = match level.trim().to_ascii_lowercase().as_str() {
        "top" | "t" => Level::Top,
        "bottom" | "b" => Level::Bottom,
        other => return Err(format!("unknown level `{other}`, expected top or bottom")),
    };
    Ok((x, level))
}

/// `"x,level;x,level"`.
pub fn coloured_points(s: &str) -> Result<Vec<(i64, Level)>, String> {
    s.split(';').map(str::trim).filter(|t| !t.is_empty()).map(coloured_point).collect()
}

/// `"t:(r,m);t:(r,m)"`.
pub fn strips(s: &str) -> Result<Vec<StripSpec>, String> {
    s.split(';')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|item| {
            let bad = || format!("expected `t:(r,m)`, got `{item}`");
            let (t, rest) = item.split_once(':').ok_or_else(bad)?;
            let inner = rest.trim().strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
            let (r, m) = inner.split_once(',').ok_or_else(bad)?;
            let num = |v: &str| v.trim().parse::<u32>().map_err(|_| bad());
            Ok(StripSpec::new(num(t)?, num(r)? as usize, num(m)? as usize))
        })
        .collect()
}

/// `"a/b;c/d"`.
pub fn shapes(s: &str) -> Result<Vec<SkewShape>, String> {
    s.split(';').map(str::trim).filter(|t| !t.is_empty()).map(shape).collect()
}
