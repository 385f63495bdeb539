//! Small built-in word lists used by the statement translator. No external
//! lexicon is consulted; anything outside these tables falls back to the
//! default rule for its position.

pub const ARTICLES: &[&str] = &["a", "an", "the"];
pub const INDEFINITE_ARTICLES: &[&str] = &["a", "an"];
pub const DEMONSTRATIVES: &[&str] = &["the", "this", "that"];

/// Forms of "to be" that make a standard copula.
pub const STANDARD_COPULAS: &[&str] = &["are", "is"];
/// Other forms of "to be" accepted as copulas by the predicate rule.
pub const OTHER_COPULAS: &[&str] = &["was", "were"];

pub const SINGULAR_COPULAS: &[&str] = &["is", "was"];

const IRREGULAR_PLURALS: &[(&str, &str)] = &[
    ("child", "children"),
    ("foot", "feet"),
    ("goose", "geese"),
    ("man", "men"),
    ("mouse", "mice"),
    ("ox", "oxen"),
    ("person", "persons"),
    ("tooth", "teeth"),
    ("woman", "women"),
    ("thief", "thieves"),
    ("wolf", "wolves"),
    ("leaf", "leaves"),
    ("knife", "knives"),
    ("wife", "wives"),
    ("life", "lives"),
    ("half", "halves"),
    ("calf", "calves"),
    ("shelf", "shelves"),
    ("deer", "deer"),
    ("fish", "fish"),
    ("sheep", "sheep"),
    ("species", "species"),
];

/// Words ending in "man" that take a regular plural.
const MAN_EXCEPTIONS: &[&str] = &["human", "german", "roman", "shaman", "talisman", "caiman", "ottoman"];

const ADJECTIVE_SUFFIXES: &[&str] = &[
    "ful", "ous", "ive", "able", "ible", "less", "ic", "al", "ish", "ent", "ant", "ed", "ing",
];

const ADJECTIVES: &[&str] = &[
    "bad", "big", "blue", "brave", "clean", "cold", "dark", "dry", "false", "fast", "free", "good", "great", "green",
    "happy", "hard", "hot", "kind", "large", "late", "loud", "mortal", "new", "old", "poor", "quiet", "red", "rich",
    "right", "safe", "short", "slow", "small", "smart", "soft", "strong", "tall", "true", "warm", "weak", "welcome",
    "wet", "white", "wise", "wrong", "young", "perfect", "honest", "fragile", "friendly", "lazy", "busy", "guilty",
    "ready",
];

/// Nouns whose endings look adjectival.
const SUFFIX_NOUNS: &[&str] = &[
    "fish",
    "dish",
    "wish",
    "animal",
    "mammal",
    "metal",
    "signal",
    "hospital",
    "crystal",
    "capital",
    "criminal",
    "official",
    "rival",
    "student",
    "parent",
    "resident",
    "agent",
    "client",
    "servant",
    "giant",
    "elephant",
    "plant",
    "merchant",
    "relative",
    "detective",
    "native",
    "republic",
    "music",
    "logic",
    "magic",
    "building",
    "painting",
    "king",
    "ring",
    "thing",
    "being",
    "bed",
    "shed",
];

/// Nouns naming kinds of people; a predicate about them gets the
/// parameter noun "people" instead of "things".
const PERSON_NOUNS: &[&str] = &[
    "people",
    "persons",
    "humans",
    "men",
    "women",
    "children",
    "adults",
    "citizens",
    "voters",
    "members",
    "employees",
    "students",
    "teachers",
    "doctors",
    "lawyers",
    "politicians",
    "soldiers",
    "workers",
    "players",
    "athletes",
    "artists",
    "writers",
    "scientists",
    "philosophers",
    "logicians",
    "athenians",
    "greeks",
    "spartans",
    "americans",
    "friends",
    "parents",
    "guests",
    "customers",
    "residents",
    "candidates",
    "senators",
    "judges",
    "thieves",
    "criminals",
    "musicians",
    "poets",
    "officers",
    "managers",
    "nurses",
    "engineers",
    "farmers",
];

pub fn is_article(word: &str) -> bool {
    ARTICLES.contains(&word)
}

pub fn is_copula(word: &str) -> bool {
    STANDARD_COPULAS.contains(&word) || OTHER_COPULAS.contains(&word)
}

/// Plural of a single noun via the irregular table and suffix rules.
pub fn pluralize(word: &str) -> String {
    if let Some((_, plural)) = IRREGULAR_PLURALS.iter().find(|(s, _)| *s == word) {
        return plural.to_string();
    }
    if let Some(stem) = word.strip_suffix("man").filter(|_| !MAN_EXCEPTIONS.contains(&word)) {
        return format!("{stem}men");
    }
    let ends = |s: &str| word.ends_with(s);
    if ends("s") || ends("x") || ends("z") || ends("ch") || ends("sh") {
        return format!("{word}es");
    }
    if let Some(stem) = word.strip_suffix('y') {
        if stem.chars().last().is_some_and(|c| !"aeiou".contains(c)) {
            return format!("{stem}ies");
        }
    }
    format!("{word}s")
}

/// Whether a word reads as a plural noun: ends in `s` (but not `ss`) or is
/// an irregular plural.
pub fn looks_plural(word: &str) -> bool {
    IRREGULAR_PLURALS.iter().any(|(s, p)| *p == word && s != p)
        || word == "people"
        || (word.len() > 2 && word.ends_with('s') && !word.ends_with("ss") && !is_adjective(word))
}

/// Whether a single predicate word is an adjective rather than a class noun.
pub fn is_adjective(word: &str) -> bool {
    if word.starts_with("non-") || word.contains('-') {
        return false;
    }
    if ADJECTIVES.contains(&word) {
        return true;
    }
    if SUFFIX_NOUNS.contains(&word) {
        return false;
    }
    if word.len() < 4 {
        return false;
    }
    if word.ends_with("ous") || word.ends_with("less") {
        return true;
    }
    !word.ends_with('s') && ADJECTIVE_SUFFIXES.iter().any(|s| word.ends_with(s))
}

pub fn is_person_noun(label: &str) -> bool {
    let head = label.rsplit(' ').next().unwrap_or(label);
    PERSON_NOUNS.contains(&head) || head.starts_with("persons-")
}
