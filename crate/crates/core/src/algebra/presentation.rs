use std::collections::HashMap;
use std::fmt;

use super::{AlgebraError, Element, Family, Generator, Word};
use crate::scalar::LaurentPoly;

/// Which of the two algebras a presentation describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    /// The full sphere, generated by `x_1..x_n`, `y_1..y_n` and adjoints.
    S,
    /// The quotient by `x_1..x_{n-1}`, generated by `y_1..y_{n+1}` and adjoints.
    Sigma,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Kind::S => "S",
            Kind::Sigma => "Sigma",
        })
    }
}

/// A defining relation `lhs = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub name: String,
    pub lhs: Element,
    pub rhs: Element,
    /// True for the sphere relation (sum of the diagonal quadratics equals 1).
    pub sphere: bool,
}

impl Relation {
    fn new(name: impl Into<String>, lhs: Element, rhs: Element) -> Self {
        Self {
            name: name.into(),
            lhs,
            rhs,
            sphere: false,
        }
    }

    /// `lhs - rhs`, which vanishes in the algebra.
    pub fn residual(&self) -> Element {
        &self.lhs - &self.rhs
    }

    pub fn star(&self) -> Relation {
        Relation {
            name: format!("{}*", self.name),
            lhs: self.lhs.star(),
            rhs: self.rhs.star(),
            sphere: self.sphere,
        }
    }
}

/// An oriented rule `a b -> rhs` on an adjacent pair of letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: (Generator, Generator),
    pub rhs: Element,
    /// Name of the relation the rule was oriented from.
    pub source: String,
}

impl Rule {
    pub fn lhs_word(&self) -> Word {
        Word::new(vec![self.lhs.0, self.lhs.1])
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{} -> {}", self.lhs.0, self.lhs.1, self.rhs)
    }
}

/// Generators, oriented rewrite rules and the relation list of one algebra.
#[derive(Clone, Debug)]
pub struct Presentation {
    n: u32,
    kind: Kind,
    sphere_reduction: bool,
    generators: Vec<Generator>,
    relations: Vec<Relation>,
    rules: Vec<Rule>,
    rule_index: HashMap<(Generator, Generator), usize>,
    eliminated: (Generator, Generator),
}

fn q(e: i32) -> LaurentPoly {
    LaurentPoly::q_pow(e)
}

/// `c_0 + c_e q^e` with integer coefficients.
fn lin(c0: i64, ce: i64, e: i32) -> LaurentPoly {
    LaurentPoly::from_int_terms([(0, c0), (e, ce)])
}

fn w(letters: &[Generator]) -> Element {
    Element::product_of(letters)
}

fn sc(c: LaurentPoly, letters: &[Generator]) -> Element {
    Element::term(c, Word::new(letters.to_vec()))
}

fn x(i: u32) -> Generator {
    Generator::x(i)
}

fn y(i: u32) -> Generator {
    Generator::y(i)
}

fn s_relations(n: u32) -> Vec<Relation> {
    let mut rels = Vec::new();
    let idx = || 1..=n;
    for i in idx() {
        for j in idx() {
            if i < j {
                rels.push(Relation::new(
                    format!("x{i}x{j} exchange"),
                    w(&[x(i), x(j)]),
                    sc(q(-1), &[x(j), x(i)]),
                ));
            }
            if i > j {
                rels.push(Relation::new(
                    format!("y{i}y{j} exchange"),
                    w(&[y(i), y(j)]),
                    sc(q(-1), &[y(j), y(i)]),
                ));
            }
            if i != j {
                rels.push(Relation::new(
                    format!("x{i}y{j} exchange"),
                    w(&[x(i), y(j)]),
                    sc(q(-1), &[y(j), x(i)]),
                ));
            }
        }
    }
    for i in idx() {
        let mut rhs = sc(q(2), &[x(i), y(i)]);
        for k in 1..i {
            rhs = &rhs + &sc(&lin(-1, 1, 2) * &q((i - k) as i32), &[x(k), y(k)]);
        }
        rels.push(Relation::new(
            format!("y{i}x{i} reorder"),
            w(&[y(i), x(i)]),
            rhs,
        ));
    }
    for i in idx() {
        let (xi, yi) = (x(i), y(i));
        let mut rhs = w(&[xi.star(), xi]);
        for k in 1..i {
            rhs = &rhs + &sc(lin(1, -1, 2), &[x(k).star(), x(k)]);
        }
        rels.push(Relation::new(
            format!("x{i} commutator"),
            w(&[xi, xi.star()]),
            rhs,
        ));

        let mut bracket = sc(q(2 * (n + 1 - i) as i32), &[xi.star(), xi]);
        for k in idx() {
            bracket = &bracket + &w(&[x(k).star(), x(k)]);
        }
        for k in i + 1..=n {
            bracket = &bracket + &w(&[y(k).star(), y(k)]);
        }
        let rhs = &w(&[yi.star(), yi]) + &bracket.scale(&lin(1, -1, 2));
        rels.push(Relation::new(
            format!("y{i} commutator"),
            w(&[yi, yi.star()]),
            rhs,
        ));

        rels.push(Relation::new(
            format!("x{i}y{i}' exchange"),
            w(&[xi, yi.star()]),
            sc(q(2), &[yi.star(), xi]),
        ));
    }
    for i in idx() {
        for j in idx().filter(|&j| j != i) {
            rels.push(Relation::new(
                format!("x{i}x{j}' exchange"),
                w(&[x(i), x(j).star()]),
                sc(q(1), &[x(j).star(), x(i)]),
            ));
            let e = (2 * n + 2 - i - j) as i32;
            rels.push(Relation::new(
                format!("y{i}y{j}' exchange"),
                w(&[y(i), y(j).star()]),
                &sc(q(1), &[y(j).star(), y(i)]) - &sc(&lin(-1, 1, 2) * &q(e), &[x(i).star(), x(j)]),
            ));
            let mut rhs = sc(q(1), &[y(j).star(), x(i)]);
            if i > j {
                let e = i as i32 - j as i32;
                rhs = &rhs + &sc(&lin(-1, 1, 2) * &q(e), &[y(i).star(), x(j)]);
            }
            rels.push(Relation::new(
                format!("x{i}y{j}' exchange"),
                w(&[x(i), y(j).star()]),
                rhs,
            ));
        }
    }
    let mut sum = Element::zero();
    for i in idx() {
        sum = &(&sum + &w(&[x(i).star(), x(i)])) + &w(&[y(i).star(), y(i)]);
    }
    rels.push(Relation {
        name: "sphere".into(),
        lhs: sum,
        rhs: Element::one(),
        sphere: true,
    });
    rels
}

fn sigma_relations(n: u32) -> Vec<Relation> {
    let top = n + 1;
    let mut rels = Vec::new();
    for i in 1..=top {
        for j in 1..i {
            if (i, j) == (top, n) {
                continue;
            }
            rels.push(Relation::new(
                format!("y{i}y{j} exchange"),
                w(&[y(i), y(j)]),
                sc(q(-1), &[y(j), y(i)]),
            ));
            rels.push(Relation::new(
                format!("y{i}'y{j} exchange"),
                w(&[y(i).star(), y(j)]),
                sc(q(-1), &[y(j), y(i).star()]),
            ));
        }
    }
    rels.push(Relation::new(
        format!("y{top}y{n} exchange"),
        w(&[y(top), y(n)]),
        sc(q(-2), &[y(n), y(top)]),
    ));
    rels.push(Relation::new(
        format!("y{top}'y{n} exchange"),
        w(&[y(top).star(), y(n)]),
        sc(q(-2), &[y(n), y(top).star()]),
    ));
    for i in 1..=top {
        let yi = y(i);
        let mut rhs = w(&[yi.star(), yi]);
        if i == n {
            rhs = &rhs + &sc(lin(1, -1, 4), &[y(top).star(), y(top)]);
        } else {
            for k in i + 1..=top {
                rhs = &rhs + &sc(lin(1, -1, 2), &[y(k).star(), y(k)]);
            }
        }
        rels.push(Relation::new(
            format!("y{i} commutator"),
            w(&[yi, yi.star()]),
            rhs,
        ));
    }
    let mut sum = Element::zero();
    for i in 1..=top {
        sum = &sum + &w(&[y(i).star(), y(i)]);
    }
    rels.push(Relation {
        name: "sphere".into(),
        lhs: sum,
        rhs: Element::one(),
        sphere: true,
    });
    rels
}

/// Adds the adjoint of every relation, skipping adjoints that repeat an
/// existing relation verbatim.
fn close_under_star(base: Vec<Relation>) -> Vec<Relation> {
    let mut out: Vec<Relation> = Vec::with_capacity(2 * base.len());
    let mut seen: Vec<Element> = Vec::new();
    for r in base.iter().cloned().chain(base.iter().map(Relation::star)) {
        let res = r.residual();
        if seen.iter().any(|s| *s == res || *s == -&res) {
            continue;
        }
        seen.push(res);
        out.push(r);
    }
    out
}

/// Solves `relation` for its largest word, giving `(lhs pair, rhs)`.
fn orient(rel: &Relation) -> Result<((Generator, Generator), Element), AlgebraError> {
    let residual = rel.residual();
    let (lead, c) = residual
        .leading()
        .map(|(w, c)| (w.clone(), c.clone()))
        .ok_or_else(|| AlgebraError::Orientation(format!("{} is trivial", rel.name)))?;
    let inv = c.inverse().ok_or_else(|| {
        AlgebraError::Orientation(format!(
            "{}: leading coefficient ({c}) of {lead} is not a unit",
            rel.name
        ))
    })?;
    let [a, b] = lead.letters() else {
        return Err(AlgebraError::Orientation(format!(
            "{}: leading word {lead} is not quadratic",
            rel.name
        )));
    };
    let rest = &residual - &Element::term(c, lead.clone());
    Ok(((*a, *b), (-&rest).scale(&inv)))
}

impl Presentation {
    /// The full sphere with sphere reduction on.
    pub fn s(n: u32) -> Result<Self, AlgebraError> {
        Self::new(Kind::S, n, true)
    }

    /// The quotient algebra with sphere reduction on.
    pub fn sigma(n: u32) -> Result<Self, AlgebraError> {
        Self::new(Kind::Sigma, n, true)
    }

    pub fn new(kind: Kind, n: u32, sphere_reduction: bool) -> Result<Self, AlgebraError> {
        if n < 1 {
            return Err(AlgebraError::Domain(format!(
                "n must be at least 1, got {n}"
            )));
        }
        let (generators, base) = match kind {
            Kind::S => {
                let mut g: Vec<Generator> = (1..=n).flat_map(|i| [x(i), y(i)]).collect();
                g.extend(g.clone().into_iter().map(Generator::star));
                (g, s_relations(n))
            }
            Kind::Sigma => {
                let mut g: Vec<Generator> = (1..=n + 1).map(y).collect();
                g.extend(g.clone().into_iter().map(Generator::star));
                (g, sigma_relations(n))
            }
        };
        let mut generators = generators;
        generators.sort();
        let relations = close_under_star(base);

        let mut rules: Vec<Rule> = Vec::new();
        let mut rule_index = HashMap::new();
        let mut eliminated = None;
        for rel in &relations {
            if rel.sphere && !sphere_reduction {
                continue;
            }
            let (lhs, rhs) = orient(rel)?;
            if rel.sphere {
                eliminated = Some(lhs);
            }
            if let Some(&k) = rule_index.get(&lhs) {
                let existing: &Rule = &rules[k];
                if existing.rhs != rhs {
                    return Err(AlgebraError::ConflictingRules(format!(
                        "{} and {} both rewrite {}{}",
                        existing.source, rel.name, lhs.0, lhs.1
                    )));
                }
                continue;
            }
            rule_index.insert(lhs, rules.len());
            rules.push(Rule {
                lhs,
                rhs,
                source: rel.name.clone(),
            });
        }
        let eliminated = eliminated.unwrap_or_else(|| match kind {
            Kind::S => (x(1).star(), x(1)),
            Kind::Sigma => (y(1).star(), y(1)),
        });

        let p = Self {
            n,
            kind,
            sphere_reduction,
            generators,
            relations,
            rules,
            rule_index,
            eliminated,
        };
        p.check_rules()?;
        Ok(p)
    }

    /// Every out-of-order pair must be covered, and every rule must strictly
    /// decrease words in the monomial order.
    fn check_rules(&self) -> Result<(), AlgebraError> {
        for &a in &self.generators {
            for &b in &self.generators {
                if a > b && !self.rule_index.contains_key(&(a, b)) {
                    return Err(AlgebraError::MissingRule(format!("{a}{b}")));
                }
            }
        }
        for rule in &self.rules {
            let lhs = rule.lhs_word();
            if let Some((w, _)) = rule.rhs.terms().find(|(w, _)| **w >= lhs) {
                return Err(AlgebraError::NonDecreasingRule(format!(
                    "{rule} (term {w})"
                )));
            }
            if let Some(g) = rule.rhs.generators().find(|g| !self.contains(*g)) {
                return Err(AlgebraError::ForeignGenerator(g.to_string()));
            }
        }
        Ok(())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn sphere_reduction(&self) -> bool {
        self.sphere_reduction
    }

    /// Same algebra with sphere reduction switched.
    pub fn with_sphere(&self, on: bool) -> Result<Self, AlgebraError> {
        Self::new(self.kind, self.n, on)
    }

    /// All generators, ascending in the generator order.
    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn contains(&self, g: Generator) -> bool {
        let max = match (self.kind, g.family) {
            (Kind::S, _) => self.n,
            (Kind::Sigma, Family::Y) => self.n + 1,
            (Kind::Sigma, Family::X) => 0,
        };
        (1..=max).contains(&g.index)
    }

    /// Human-readable generator range, e.g. `y1..y3`.
    pub fn generator_range(&self) -> String {
        match self.kind {
            Kind::S => format!("x1..x{n}, y1..y{n}", n = self.n),
            Kind::Sigma => format!("y1..y{}", self.n + 1),
        }
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn rule_for(&self, a: Generator, b: Generator) -> Option<&Rule> {
        self.rule_index.get(&(a, b)).map(|&k| &self.rules[k])
    }

    /// The diagonal pair removed by the sphere rule.
    pub fn eliminated_pair(&self) -> (Generator, Generator) {
        self.eliminated
    }

    /// Every defining relation and adjoint, including the sphere relation.
    pub fn defining_relations(&self) -> &[Relation] {
        &self.relations
    }

    /// The relations the rewrite system is expected to reduce to zero: the
    /// sphere relation is included only when sphere reduction is on.
    pub fn relations(&self) -> impl Iterator<Item = &Relation> {
        self.relations
            .iter()
            .filter(|r| self.sphere_reduction || !r.sphere)
    }

    /// Positions `i` where the pair `(w[i], w[i + 1])` has a rule.
    pub fn reducible_positions(&self, word: &Word) -> Vec<usize> {
        word.letters()
            .windows(2)
            .enumerate()
            .filter(|(_, p)| self.rule_index.contains_key(&(p[0], p[1])))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn first_reducible(&self, word: &Word) -> Option<usize> {
        word.letters()
            .windows(2)
            .position(|p| self.rule_index.contains_key(&(p[0], p[1])))
    }

    pub fn is_normal(&self, word: &Word) -> bool {
        self.first_reducible(word).is_none()
    }

    /// One rewrite step at `pos`, or `None` if no rule applies there.
    pub fn rewrite_at(&self, word: &Word, pos: usize) -> Option<Element> {
        let l = word.letters();
        if pos + 1 >= l.len() {
            return None;
        }
        let rule = self.rule_for(l[pos], l[pos + 1])?;
        let mut out = Element::zero();
        for (mid, c) in rule.rhs.terms() {
            out.add_term(word.splice(pos, pos + 2, mid), c);
        }
        Some(out)
    }
}
