/// Plural count nouns that read back unchanged through the parser.
pub const NOUNS: &[&str] = &[
    "dogs",
    "cats",
    "mammals",
    "reptiles",
    "birds",
    "fish",
    "whales",
    "insects",
    "plants",
    "trees",
    "flowers",
    "rocks",
    "metals",
    "stars",
    "planets",
    "cars",
    "trucks",
    "boats",
    "houses",
    "cities",
    "books",
    "poems",
    "songs",
    "games",
    "tools",
    "machines",
    "computers",
    "numbers",
    "shapes",
    "squares",
    "students",
    "teachers",
    "doctors",
    "lawyers",
    "citizens",
    "voters",
    "members",
    "soldiers",
    "artists",
    "poets",
    "farmers",
    "judges",
    "greeks",
    "athenians",
    "spartans",
    "humans",
    "animals",
    "things",
    "criminals",
    "thieves",
];
