//! Reader and writer for catalog files.
//!
//! A file holds one group. Sections:
//!
//! ```text
//! [meta]            group = G6, group_order = 48, classes = s | t
//! [generators]      s t
//! [orders]          s = 2
//! [relations]       s t s t s t = t s t s t s
//! [center]          word = (s t)^3, order = 4
//! [er.generators]   a b c            (and er.orders / er.relations / er.center)
//! [phi1]            s -> a           (BMR generator to ER word)
//! [phi2]            a -> s           (ER generator to BMR word)
//! [braid]           optional braid relations replacing [relations]
//! [spanning]        see `SpanningRecipe`
//! ```
//!
//! Relation lines may chain (`a = b = c`) and may end in `central`, which
//! expands to commutation with every generator.

use std::collections::BTreeMap;

use super::spanning::{Factor, RecipeStatus, SpanningRecipe};
use super::{Flavor, GenMap, GroupId, Presentation, PresentationError, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub group: GroupId,
    pub bmr: Presentation,
    pub er: Presentation,
    pub phi1: GenMap,
    pub phi2: GenMap,
    /// Replaces the BMR relations in the braid flavor when present.
    pub braid_override: Option<Vec<(Word, Word)>>,
    pub spanning: Option<SpanningRecipe>,
    /// SHA-256 of the file text, lowercase hex.
    pub checksum: String,
}

impl CatalogEntry {
    pub fn presentation(&self, flavor: Flavor) -> Presentation {
        match flavor {
            Flavor::Bmr => self.bmr.clone(),
            Flavor::Er => self.er.clone(),
            Flavor::Braid => {
                let mut p = self.bmr.clone();
                p.flavor = Flavor::Braid;
                p.orders = vec![0; p.ngens()];
                if let Some(rel) = &self.braid_override {
                    p.relations = rel.clone();
                }
                p
            }
        }
    }
}

struct Section {
    name: String,
    lines: Vec<(usize, String)>,
}

pub fn parse_entry(file: &str, text: &str) -> Result<CatalogEntry, PresentationError> {
    let ferr = |line: usize, msg: String| PresentationError::Format { file: file.to_string(), line, msg };
    let mut sections: Vec<Section> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            if sections.iter().any(|s| s.name == name) {
                return Err(ferr(k + 1, format!("duplicate section [{name}]")));
            }
            sections.push(Section { name: name.trim().to_string(), lines: Vec::new() });
            continue;
        }
        match sections.last_mut() {
            Some(s) => s.lines.push((k + 1, line.to_string())),
            None => return Err(ferr(k + 1, "content before the first section".into())),
        }
    }
    let get = |name: &str| sections.iter().find(|s| s.name == name);
    let need = |name: &str| get(name).ok_or_else(|| ferr(0, format!("missing section [{name}]")));
    for s in &sections {
        const KNOWN: [&str; 14] = [
            "meta",
            "generators",
            "orders",
            "relations",
            "center",
            "er.generators",
            "er.orders",
            "er.relations",
            "er.center",
            "phi1",
            "phi2",
            "braid",
            "spanning",
            "notes",
        ];
        if !KNOWN.contains(&s.name.as_str()) {
            return Err(ferr(s.lines.first().map_or(0, |l| l.0), format!("unknown section [{}]", s.name)));
        }
    }

    let meta = keyvals(need("meta")?, &ferr)?;
    let group: GroupId = meta.get("group").ok_or_else(|| ferr(0, "meta needs group".into()))?.1.parse()?;
    let group_order: u64 = parse_num(meta.get("group_order"), "group_order", &ferr)?;

    let bmr_gens = generators(need("generators")?, &ferr)?;
    let er_gens = generators(need("er.generators")?, &ferr)?;
    let bmr_orders = orders(get("orders"), &bmr_gens, &ferr)?;
    let er_orders = orders(get("er.orders"), &er_gens, &ferr)?;
    let bmr_rel = relations(need("relations")?, &bmr_gens, &ferr)?;
    let er_rel = relations(need("er.relations")?, &er_gens, &ferr)?;

    let center = keyvals(need("center")?, &ferr)?;
    let (cl, cw) = center.get("word").ok_or_else(|| ferr(0, "center needs word".into()))?;
    let center_word = Word::parse(cw, &bmr_gens).map_err(|e| ferr(*cl, e.to_string()))?;
    let center_order: u64 = parse_num(center.get("order"), "order", &ferr)?;

    let classes = match meta.get("classes") {
        Some((line, spec)) => spec
            .split('|')
            .map(|part| {
                part.split_whitespace()
                    .map(|n| {
                        bmr_gens
                            .iter()
                            .position(|g| g == n)
                            .ok_or_else(|| ferr(*line, format!("unknown generator {n:?}")))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?,
        None => (0..bmr_gens.len()).map(|g| vec![g]).collect(),
    };

    let phi1 = genmap("phi1", need("phi1")?, &bmr_gens, &er_gens, Flavor::Bmr, Flavor::Er, &ferr)?;
    let phi2 = genmap("phi2", need("phi2")?, &er_gens, &bmr_gens, Flavor::Er, Flavor::Bmr, &ferr)?;

    let er_center = match get("er.center") {
        Some(sec) => {
            let kv = keyvals(sec, &ferr)?;
            let (l, w) = kv.get("word").ok_or_else(|| ferr(0, "er.center needs word".into()))?;
            Word::parse(w, &er_gens).map_err(|e| ferr(*l, e.to_string()))?
        }
        None => super::translate(&center_word, &phi1, &bmr_gens)?,
    };

    let bmr = Presentation {
        group,
        flavor: Flavor::Bmr,
        generators: bmr_gens.clone(),
        orders: bmr_orders,
        relations: bmr_rel,
        center_word,
        center_order,
        group_order,
        classes,
    };
    let er = Presentation {
        group,
        flavor: Flavor::Er,
        generators: er_gens.clone(),
        orders: er_orders,
        relations: er_rel,
        center_word: er_center,
        center_order,
        group_order,
        classes: (0..er_gens.len()).map(|g| vec![g]).collect(),
    };
    bmr.validate()?;
    er.validate()?;

    let braid_override = match get("braid") {
        Some(sec) => Some(relations(sec, &bmr_gens, &ferr)?),
        None => None,
    };
    let spanning = match get("spanning") {
        Some(sec) => Some(spanning(sec, &bmr_gens, &ferr)?),
        None => None,
    };

    Ok(CatalogEntry {
        group,
        bmr,
        er,
        phi1,
        phi2,
        braid_override,
        spanning,
        checksum: super::catalog::sha256_hex(text.as_bytes()),
    })
}

type Ferr<'a> = dyn Fn(usize, String) -> PresentationError + 'a;

fn keyvals(sec: &Section, ferr: &Ferr) -> Result<BTreeMap<String, (usize, String)>, PresentationError> {
    let mut out = BTreeMap::new();
    for (line, text) in &sec.lines {
        let (k, v) = text.split_once('=').ok_or_else(|| ferr(*line, "expected key = value".into()))?;
        out.insert(k.trim().to_string(), (*line, v.trim().to_string()));
    }
    Ok(out)
}

fn parse_num(v: Option<&(usize, String)>, key: &str, ferr: &Ferr) -> Result<u64, PresentationError> {
    let (line, s) = v.ok_or_else(|| ferr(0, format!("missing {key}")))?;
    s.parse().map_err(|_| ferr(*line, format!("{key} must be a nonnegative integer")))
}

fn generators(sec: &Section, ferr: &Ferr) -> Result<Vec<String>, PresentationError> {
    let names: Vec<String> = sec.lines.iter().flat_map(|(_, l)| l.split_whitespace().map(String::from)).collect();
    for (i, n) in names.iter().enumerate() {
        let ok = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
            && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok || names[..i].contains(n) || n == "central" {
            return Err(ferr(sec.lines[0].0, format!("bad or repeated generator name {n:?}")));
        }
    }
    Ok(names)
}

fn orders(sec: Option<&Section>, gens: &[String], ferr: &Ferr) -> Result<Vec<u32>, PresentationError> {
    let mut out = vec![0u32; gens.len()];
    if let Some(sec) = sec {
        for (k, (line, v)) in keyvals(sec, ferr)? {
            let g = gens.iter().position(|n| *n == k).ok_or_else(|| ferr(line, format!("unknown generator {k:?}")))?;
            out[g] = v.parse().map_err(|_| ferr(line, "order must be an integer".into()))?;
        }
    }
    Ok(out)
}

fn relations(sec: &Section, gens: &[String], ferr: &Ferr) -> Result<Vec<(Word, Word)>, PresentationError> {
    let mut out = Vec::new();
    for (line, text) in &sec.lines {
        let mut parts: Vec<&str> = text.split('=').map(str::trim).collect();
        let central = parts.last() == Some(&"central");
        if central {
            parts.pop();
        }
        if parts.is_empty() || (parts.len() < 2 && !central) {
            return Err(ferr(*line, "expected lhs = rhs".into()));
        }
        let words = parts
            .iter()
            .map(|p| Word::parse(p, gens).map_err(|e| ferr(*line, e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        for pair in words.windows(2) {
            out.push((pair[0].clone(), pair[1].clone()));
        }
        if central {
            for g in 0..gens.len() {
                let x = &words[0];
                let gw = Word::letter(g, 1);
                out.push((x.concat(&gw), gw.concat(x)));
            }
        }
    }
    Ok(out)
}

fn genmap(
    name: &str,
    sec: &Section,
    src: &[String],
    dst: &[String],
    source: Flavor,
    target: Flavor,
    ferr: &Ferr,
) -> Result<GenMap, PresentationError> {
    let mut images = vec![None; src.len()];
    for (line, text) in &sec.lines {
        let (g, w) = text.split_once("->").ok_or_else(|| ferr(*line, "expected gen -> word".into()))?;
        let g = g.trim();
        let i = src.iter().position(|n| n == g).ok_or_else(|| ferr(*line, format!("unknown generator {g:?}")))?;
        images[i] = Some(Word::parse(w.trim(), dst).map_err(|e| ferr(*line, e.to_string()))?);
    }
    Ok(GenMap { name: name.to_string(), source, target, images })
}

fn spanning(sec: &Section, gens: &[String], ferr: &Ferr) -> Result<SpanningRecipe, PresentationError> {
    let mut status = RecipeStatus::Stated;
    let mut zpow = (0u32, 0u32);
    let mut subalgebras: Vec<Option<usize>> = Vec::new();
    let mut terms = Vec::new();
    for (line, text) in &sec.lines {
        let (k, v) = text.split_once('=').ok_or_else(|| ferr(*line, "expected key = value".into()))?;
        let (k, v) = (k.trim(), v.trim());
        match k {
            "status" => {
                status = match v {
                    "stated" => RecipeStatus::Stated,
                    "reconstructed" => RecipeStatus::Reconstructed,
                    _ => return Err(ferr(*line, "status is stated or reconstructed".into())),
                }
            }
            "zpow" => {
                let (a, b) = v.split_once("..").ok_or_else(|| ferr(*line, "zpow = lo..hi".into()))?;
                zpow = (
                    a.trim().parse().map_err(|_| ferr(*line, "bad zpow".into()))?,
                    b.trim().parse().map_err(|_| ferr(*line, "bad zpow".into()))?,
                );
            }
            "term" => terms.push(term(v, gens, *line, ferr)?),
            _ if k.starts_with('u') && k[1..].parse::<usize>().is_ok() => {
                let i: usize = k[1..].parse().unwrap();
                let g =
                    gens.iter().position(|n| n == v).ok_or_else(|| ferr(*line, format!("unknown generator {v:?}")))?;
                if i == 0 {
                    return Err(ferr(*line, "subalgebras are numbered from u1".into()));
                }
                if subalgebras.len() < i {
                    subalgebras.resize(i, None);
                }
                subalgebras[i - 1] = Some(g);
            }
            _ => return Err(ferr(*line, format!("unknown spanning key {k:?}"))),
        }
    }
    let subalgebras = subalgebras
        .into_iter()
        .enumerate()
        .map(|(i, g)| g.ok_or_else(|| ferr(0, format!("u{} is not declared", i + 1))))
        .collect::<Result<Vec<_>, _>>()?;
    for t in &terms {
        for f in t {
            if let Factor::Sub(i) = f {
                if *i >= subalgebras.len() {
                    return Err(ferr(0, format!("u{} is not declared", i + 1)));
                }
            }
        }
    }
    Ok(SpanningRecipe { status, zpow, subalgebras, terms })
}

/// A term is a sequence of `uN` factors and `{word}` fixed words.
fn term(v: &str, gens: &[String], line: usize, ferr: &Ferr) -> Result<Vec<Factor>, PresentationError> {
    let mut out = Vec::new();
    let mut rest = v.trim();
    while !rest.is_empty() {
        if let Some(r) = rest.strip_prefix('{') {
            let (inner, after) = r.split_once('}').ok_or_else(|| ferr(line, "unclosed '{'".into()))?;
            out.push(Factor::Fixed(Word::parse(inner, gens).map_err(|e| ferr(line, e.to_string()))?));
            rest = after.trim_start();
        } else {
            let end = rest.find(|c: char| c.is_whitespace() || c == '{').unwrap_or(rest.len());
            let tok = &rest[..end];
            let i: usize = tok
                .strip_prefix('u')
                .and_then(|d| d.parse().ok())
                .filter(|&i| i >= 1)
                .ok_or_else(|| ferr(line, format!("bad factor {tok:?}")))?;
            out.push(Factor::Sub(i - 1));
            rest = rest[end..].trim_start();
        }
    }
    Ok(out)
}

/// Canonical text form; `parse_entry(serialize_entry(e))` reproduces `e`
/// (up to the checksum, which tracks the text).
pub fn serialize_entry(e: &CatalogEntry) -> String {
    let mut s = String::new();
    let b = &e.bmr;
    let r = &e.er;
    let push = |s: &mut String, line: String| {
        s.push_str(&line);
        s.push('\n');
    };
    push(&mut s, "[meta]".into());
    push(&mut s, format!("group = {}", e.group));
    push(&mut s, format!("group_order = {}", b.group_order));
    let classes: Vec<String> =
        b.classes.iter().map(|c| c.iter().map(|&g| b.generators[g].clone()).collect::<Vec<_>>().join(" ")).collect();
    push(&mut s, format!("classes = {}", classes.join(" | ")));
    for (prefix, p) in [("", b), ("er.", r)] {
        push(&mut s, format!("[{prefix}generators]"));
        push(&mut s, p.generators.join(" "));
        push(&mut s, format!("[{prefix}orders]"));
        for (g, &o) in p.orders.iter().enumerate() {
            if o > 0 {
                push(&mut s, format!("{} = {o}", p.generators[g]));
            }
        }
        push(&mut s, format!("[{prefix}relations]"));
        for (l, rr) in &p.relations {
            push(&mut s, format!("{} = {}", p.show(l), p.show(rr)));
        }
    }
    push(&mut s, "[center]".into());
    push(&mut s, format!("word = {}", b.show(&b.center_word)));
    push(&mut s, format!("order = {}", b.center_order));
    push(&mut s, "[er.center]".into());
    push(&mut s, format!("word = {}", r.show(&r.center_word)));
    for (name, map, src, dst) in [("phi1", &e.phi1, b, r), ("phi2", &e.phi2, r, b)] {
        push(&mut s, format!("[{name}]"));
        for (g, img) in map.images.iter().enumerate() {
            if let Some(w) = img {
                push(&mut s, format!("{} -> {}", src.generators[g], dst.show(w)));
            }
        }
    }
    if let Some(rel) = &e.braid_override {
        push(&mut s, "[braid]".into());
        for (l, rr) in rel {
            push(&mut s, format!("{} = {}", b.show(l), b.show(rr)));
        }
    }
    if let Some(sp) = &e.spanning {
        push(&mut s, "[spanning]".into());
        let st = match sp.status {
            RecipeStatus::Stated => "stated",
            RecipeStatus::Reconstructed => "reconstructed",
        };
        push(&mut s, format!("status = {st}"));
        push(&mut s, format!("zpow = {}..{}", sp.zpow.0, sp.zpow.1));
        for (i, &g) in sp.subalgebras.iter().enumerate() {
            push(&mut s, format!("u{} = {}", i + 1, b.generators[g]));
        }
        for t in &sp.terms {
            let parts: Vec<String> = t
                .iter()
                .map(|f| match f {
                    Factor::Sub(i) => format!("u{}", i + 1),
                    Factor::Fixed(w) => format!("{{{}}}", b.show(w)),
                })
                .collect();
            push(&mut s, format!("term = {}", parts.join(" ")));
        }
    }
    s
}
