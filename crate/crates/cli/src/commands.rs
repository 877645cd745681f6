use std::path::Path;

use npinv_core::adjunction::{genus, interior_hull, is_interior_polygon, max_polygon, onion};
use npinv_core::enumeration::{census_csv, census_report, enumerate_interior_polygons};
use npinv_core::field::format_rational;
use npinv_core::invariants::{
    cab_polygon, classify_optional, classify_special, clifford, fingerprint, gonality, is_p1xp1, is_smooth_plane,
    is_well_aligned, pencils, predicted_betti, schreyer_invariants, scrollar_invariants, secondary_scrollar_invariants,
    BettiFlag,
};
use npinv_core::laurent::{
    is_nondegenerate, is_weakly_nondegenerate, newton_polygon, random_nondegenerate_counted, DEFAULT_MODULUS,
};
use npinv_core::lattice::parse_points;
use npinv_core::normal_form::{equivalent, normal_form};
use npinv_core::toric::{
    canonical_quadrics, genus5_discriminant, i2_dimension, quadric_rank, toric_binomials, xi51, DecompositionMode,
    QuadraticGenerator,
};
use npinv_core::width::{lattice_width, normalize_to_strip, simplex_size, width_along};
use npinv_core::{CoefficientField, Error, LatticePolygon, LaurentPolynomial};
use serde_json::{json, Value};

use crate::{pretty, Command};

#[derive(Debug)]
pub enum CliError {
    /// Malformed arguments or input files: exit 1.
    Usage(String),
    /// Valid input outside an operation's domain: exit 2.
    Domain(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(m) => CliError::Usage(m),
            other => CliError::Domain(other),
        }
    }
}

type Out = Result<String, CliError>;

fn polygon(s: &str) -> Result<LatticePolygon, CliError> {
    Ok(s.parse::<LatticePolygon>()?)
}

fn direction(s: &str) -> Result<(i64, i64), CliError> {
    match parse_points(s)?.as_slice() {
        [p] => Ok((p.i, p.j)),
        _ => Err(CliError::Usage(format!("expected one direction \"(a,b)\", got {s:?}"))),
    }
}

fn read_polynomial(path: &Path) -> Result<LaurentPolynomial, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    Ok(LaurentPolynomial::from_json(&text)?)
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

/// Absorbs domain errors into `null` plus a warning.
fn optional<T: serde::Serialize>(r: npinv_core::Result<T>, what: &str, warnings: &mut Vec<String>) -> Value {
    match r {
        Ok(x) => to_value(&x),
        Err(e) => {
            warnings.push(format!("{what}: {e}"));
            Value::Null
        }
    }
}

fn report(command: &str, input: Value, results: Value, warnings: Vec<String>, pretty_out: bool) -> String {
    let v = json!({ "command": command, "input": input, "results": results, "warnings": warnings });
    if pretty_out {
        pretty::render(&v)
    } else {
        v.to_string()
    }
}

fn polygon_input(p: &LatticePolygon) -> Value {
    json!({ "vertices": p, "normalForm": normal_form(p).0 })
}

pub fn run(cmd: &Command, pretty_out: bool) -> Out {
    match cmd {
        Command::Analyze { polygon: p, direction: d } => analyze(p, d.as_deref(), pretty_out),
        Command::Equiv { p, q } => equiv(p, q, pretty_out),
        Command::Interior { polygon: p } => interior(p, pretty_out),
        Command::Width { polygon: p, direction: d } => width(p, d.as_deref(), pretty_out),
        Command::Enumerate { genus: g, csv } => enumerate(g, *csv, pretty_out),
        Command::Fingerprint { polygon: p, genus: g } => fingerprint_cmd(p.as_deref(), *g, pretty_out),
        Command::Nondeg { file, container, sample, seed, modulus } => {
            nondeg(file.as_deref(), container.as_deref(), sample.as_deref(), *seed, *modulus, pretty_out)
        }
        Command::Quadrics { file, direction: d } => quadrics(file, d.as_deref(), pretty_out),
        Command::Discriminant { file } => discriminant(file, pretty_out),
        Command::Cab { a, b } => cab(*a, *b, pretty_out),
        Command::Betti { polygon: p } => betti(p, pretty_out),
    }
}

fn analyze(p: &str, dir: Option<&str>, pretty_out: bool) -> Out {
    let p = polygon(p)?;
    if p.dimension() != 2 {
        return Err(Error::NotTwoDimensional.into());
    }
    let mut warnings = Vec::new();
    let int1 = interior_hull(&p);
    let dirs = pencils(&p)?;
    let chosen: Vec<(i64, i64)> = match dir {
        Some(d) => {
            let v = direction(d)?;
            let cert = lattice_width(&p);
            let canon = npinv_core::lattice::canonical_direction(v);
            if !cert.directions.contains(&canon) {
                return Err(Error::NotWidthDirection(v.0, v.1).into());
            }
            vec![v]
        }
        None => dirs.clone().unwrap_or_default(),
    };
    let mut scrollar = Vec::new();
    let mut secondary = Vec::new();
    for &v in &chosen {
        let s = optional(scrollar_invariants(&p, v), "scrollar", &mut warnings);
        scrollar.push(json!({ "direction": v, "multiset": s }));
        if lattice_width(&p).width >= 4 && int1.as_ref().and_then(interior_hull).is_some() {
            let aligned = is_well_aligned(&p, v)?;
            let inv = if aligned.aligned {
                optional(secondary_scrollar_invariants(&p, v), "secondary", &mut warnings)
            } else {
                Value::Null
            };
            let warn = "minEZero: some E vanishes, while the secondary formula is derived for e1 > 0";
            if inv["minEZero"] == true && !warnings.iter().any(|w| w == warn) {
                warnings.push(warn.into());
            }
            secondary.push(json!({ "direction": v, "wellAligned": aligned.aligned, "invariants": inv }));
        }
    }
    let gon = gonality(&p)?;
    let schreyer = if gon == 4 { Some(schreyer_invariants(&p)?) } else { None };
    if schreyer.is_some_and(|s| s.anomalous) {
        warnings.push("anomalous".into());
    }
    let cl = optional(clifford(&p).map(|(i, d)| json!({ "index": i, "dimension": d })), "clifford", &mut warnings);
    let p1 = optional(is_p1xp1(&p), "p1xp1", &mut warnings);
    let results = json!({
        "genus": genus(&p),
        "latticeWidth": lattice_width(&p),
        "gonality": gon,
        "clifford": cl,
        "pencils": dirs,
        "scrollar": scrollar,
        "secondary": secondary,
        "schreyer": schreyer,
        "specialShape": classify_special(&p),
        "interiorShape": classify_optional(int1.as_ref()),
        "smoothPlaneDegree": is_smooth_plane(&p)?,
        "p1xp1": p1,
    });
    Ok(report("analyze", polygon_input(&p), results, warnings, pretty_out))
}

fn equiv(p: &str, q: &str, pretty_out: bool) -> Out {
    let (p, q) = (polygon(p)?, polygon(q)?);
    let w = equivalent(&p, &q);
    let results = json!({ "equivalent": w.is_some(), "witness": w });
    Ok(report("equiv", json!([polygon_input(&p), polygon_input(&q)]), results, vec![], pretty_out))
}

fn interior(p: &str, pretty_out: bool) -> Out {
    let p = polygon(p)?;
    let hulls = onion(&p);
    let is_int = is_interior_polygon(&p);
    let results = json!({
        "genus": genus(&p),
        "interiorHull": hulls.first(),
        "onion": hulls,
        "isInteriorPolygon": is_int,
        "maxPolygon": if is_int { Some(max_polygon(&p)?) } else { None },
    });
    Ok(report("interior", polygon_input(&p), results, vec![], pretty_out))
}

fn width(p: &str, dir: Option<&str>, pretty_out: bool) -> Out {
    let p = polygon(p)?;
    let mut results = json!({ "certificate": lattice_width(&p), "simplexSize": simplex_size(&p) });
    if let Some(d) = dir {
        let v = direction(d)?;
        results["widthAlong"] = json!(width_along(&p, v)?);
        results["strip"] = to_value(&normalize_to_strip(&p, v)?);
    }
    Ok(report("width", polygon_input(&p), results, vec![], pretty_out))
}

fn genus_range(s: &str) -> Result<Vec<i64>, CliError> {
    let bad = || CliError::Usage(format!("--genus expects g or a..b, got {s:?}"));
    let parse = |x: &str| x.trim().parse::<i64>().map_err(|_| bad());
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (parse(a)?, parse(b.trim_start_matches('='))?);
            if a > b {
                return Err(bad());
            }
            Ok((a..=b).collect())
        }
        None => Ok(vec![parse(s)?]),
    }
}

fn enumerate(g: &str, csv: bool, pretty_out: bool) -> Out {
    let genera = genus_range(g)?;
    if csv {
        return Ok(census_csv(&genera)?);
    }
    let mut out = String::new();
    for g in genera {
        let census = enumerate_interior_polygons(g)?;
        if pretty_out {
            out.push_str(&pretty::census_table(&census));
        } else {
            out.push_str(&census.to_json_lines());
        }
    }
    Ok(out)
}

fn fingerprint_cmd(p: Option<&str>, g: Option<i64>, pretty_out: bool) -> Out {
    match (p, g) {
        (Some(p), None) => {
            let p = polygon(p)?;
            let fp = fingerprint(&p)?;
            Ok(report("fingerprint", polygon_input(&p), to_value(&fp), vec![], pretty_out))
        }
        (None, Some(g)) => {
            let r = census_report(g)?;
            let blocks: Vec<Vec<&LatticePolygon>> = r
                .partition
                .iter()
                .filter(|b| b.len() > 1)
                .map(|b| b.iter().map(|&k| &r.entries[k].interior).collect())
                .collect();
            let results = json!({
                "count": r.count,
                "partition": r.partition,
                "nonSingletonBlocks": blocks,
                "entries": r.entries,
            });
            Ok(report("fingerprint", json!({ "genus": g }), results, vec![], pretty_out))
        }
        _ => Err(CliError::Usage("fingerprint takes either a polygon or --genus".into())),
    }
}

fn field_for(modulus: Option<u64>, default: CoefficientField) -> Result<CoefficientField, CliError> {
    match modulus {
        Some(p) => Ok(CoefficientField::prime(p)?),
        None => Ok(default),
    }
}

fn nondeg(
    file: Option<&Path>,
    container: Option<&str>,
    sample: Option<&str>,
    seed: Option<u64>,
    modulus: Option<u64>,
    pretty_out: bool,
) -> Out {
    match (file, sample) {
        (Some(path), None) => {
            let mut f = read_polynomial(path)?;
            if let Some(p) = modulus {
                f = LaurentPolynomial::new(CoefficientField::prime(p)?, f.terms().clone())?;
            }
            let verdict = match container {
                Some(c) => is_weakly_nondegenerate(&f, &polygon(c)?)?,
                None => is_nondegenerate(&f)?,
            };
            let input = json!({ "polynomial": f, "newtonPolygon": newton_polygon(&f) });
            Ok(report("nondeg", input, to_value(&verdict), vec![], pretty_out))
        }
        (None, Some(p)) => {
            let delta = polygon(p)?;
            let field = field_for(modulus, CoefficientField::PrimeField(DEFAULT_MODULUS))?;
            let seed = seed.unwrap_or(0);
            let (f, draws) = random_nondegenerate_counted(&delta, field, seed)?;
            let results = json!({ "polynomial": f, "draws": draws, "verdict": is_nondegenerate(&f)? });
            Ok(report("nondeg", json!({ "polygon": delta, "seed": seed, "modulus": field.modulus() }), results, vec![], pretty_out))
        }
        _ => Err(CliError::Usage("nondeg takes either a polynomial file or --sample POLYGON".into())),
    }
}

fn quadrics(path: &Path, dir: Option<&str>, pretty_out: bool) -> Out {
    let f = read_polynomial(path)?;
    let mode = match dir {
        Some(d) => DecompositionMode::WellAligned(direction(d)?),
        None => DecompositionMode::Lexicographic,
    };
    let qs = canonical_quadrics(&f, mode)?;
    let int1 = interior_hull(&newton_polygon(&f)).ok_or(Error::NotTwoDimensional)?;
    let binomials = toric_binomials(&int1)?;
    let mut gens: Vec<QuadraticGenerator> =
        binomials.iter().filter(|b| b.degree() == 2).map(QuadraticGenerator::from_binomial).collect::<Result<_, _>>()?;
    gens.extend(qs.iter().cloned());
    let results = json!({
        "interiorHull": int1,
        "binomials": binomials,
        "quadrics": qs,
        "i2Dimension": i2_dimension(&int1)?,
        "combinedRank": quadric_rank(&gens, f.field())?,
    });
    Ok(report("quadrics", json!({ "polynomial": f }), results, vec![], pretty_out))
}

fn discriminant(path: &Path, pretty_out: bool) -> Out {
    let f = read_polynomial(path)?;
    let d = genus5_discriminant(&f)?;
    let sixteen = d.scaled(16);
    let xi = xi51();
    let inside = d.support().iter().all(|&q| xi.contains(q));
    let verdict = is_nondegenerate(&sixteen.to_laurent()?)?;
    let a23 = format_rational(&d.coefficient(2, 3));
    let a32 = format_rational(&d.coefficient(3, 2));
    let results = json!({
        "sixteenDelta": sixteen.to_json_map(),
        "delta": d.to_json_map(),
        "supportInsideXi": inside,
        "newtonPolygonIsXi": newton_polygon(&sixteen.to_laurent()?) == xi,
        "a23": a23,
        "a32": a32,
        "xiNondegenerate": verdict.status,
    });
    Ok(report("discriminant", json!({ "polynomial": f }), results, vec![], pretty_out))
}

fn cab(a: i64, b: i64, pretty_out: bool) -> Out {
    let c = cab_polygon(a, b)?;
    Ok(report("cab", json!({ "a": a, "b": b }), to_value(&c), vec![], pretty_out))
}

fn betti(p: &str, pretty_out: bool) -> Out {
    let p = polygon(p)?;
    let table = predicted_betti(&p)?;
    let mut warnings = Vec::new();
    match table.as_ref().map(|t| t.flag) {
        Some(BettiFlag::Conjectural) => warnings.push("conjectural".to_string()),
        Some(BettiFlag::Observed) => warnings.push("observed".to_string()),
        Some(BettiFlag::Known) => {}
        None => warnings.push("no prediction for gonality at least 5".to_string()),
    }
    Ok(report("betti", polygon_input(&p), to_value(&table), warnings, pretty_out))
}
