#include "ltnorm/lexicon.hpp"

#include <stdexcept>

namespace ltnorm {

char case_code(Case c) { return "NGAI"[static_cast<int>(c)]; }
char gender_code(Gender g) { return "FM"[static_cast<int>(g)]; }

namespace {

UnitInfo unit(std::string key, std::string abbrev_re, Gender g,
              std::array<std::string, 4> sg, std::array<std::string, 4> pl,
              bool time_or_distance) {
  UnitInfo u;
  u.key = std::move(key);
  u.abbrev_re = std::move(abbrev_re);
  u.gender = g;
  u.forms[0] = std::move(sg);
  u.forms[1] = std::move(pl);
  u.time_or_distance = time_or_distance;
  return u;
}

LexiconTables build_tables() {
  LexiconTables t;

  t.prepositions_genitive = {
      "anot", "ant", "arti", "aukščiau", "be", "dėka", "dėl", "dėlei",
      "greta", "iki", "lig", "ligi", "iš", "link", "linkui", "netoli",
      "nuo", "pasak", "pirmiau", "pirm", "prie", "pusiau", "šalia", "tarp",
      "toliau", "žemiau", "vidury", "vidur", "vietoj", "virš", "viršum",
      "viršuj", "išilgai", "įstrižai", "įkypai", "skersai", "kiaurai",
      "skradžiai", "abipus", "anapus", "šiapus", "abigaliai", "iš po",
      "iš už"};
  t.prepositions_accusative = {"apie",   "aplink", "aplinkui", "į",
                               "pagal",  "palei",  "pas",      "paskui",
                               "paskum", "per",    "prieš",    "priešais",
                               "pro"};
  t.prepositions_instrumental = {"su", "sulig", "ties"};

  t.months_genitive = {"sausio",    "vasario", "kovo",      "balandžio",
                       "gegužės",   "birželio", "liepos",    "rugpjūčio",
                       "rugsėjo",   "spalio",  "lapkričio", "gruodžio"};
  t.months_nominative = {"sausis",   "vasaris", "kovas",     "balandis",
                         "gegužė",   "birželis", "liepa",     "rugpjūtis",
                         "rugsėjis", "spalis",  "lapkritis", "gruodis"};

  // digit_cardinal[gender][case][digit-1], cases N G A I
  t.digit_cardinal[static_cast<int>(Gender::M)] = {{
      {"vienas", "du", "trys", "keturi", "penki", "šeši", "septyni",
       "aštuoni", "devyni"},
      {"vieno", "dviejų", "trijų", "keturių", "penkių", "šešių", "septynių",
       "aštuonių", "devynių"},
      {"vieną", "du", "tris", "keturis", "penkis", "šešis", "septynis",
       "aštuonis", "devynis"},
      {"vienu", "dviem", "trimis", "keturiais", "penkiais", "šešiais",
       "septyniais", "aštuoniais", "devyniais"},
  }};
  t.digit_cardinal[static_cast<int>(Gender::F)] = {{
      {"viena", "dvi", "trys", "keturios", "penkios", "šešios", "septynios",
       "aštuonios", "devynios"},
      {"vienos", "dviejų", "trijų", "keturių", "penkių", "šešių", "septynių",
       "aštuonių", "devynių"},
      {"vieną", "dvi", "tris", "keturias", "penkias", "šešias", "septynias",
       "aštuonias", "devynias"},
      {"viena", "dviem", "trimis", "keturiomis", "penkiomis", "šešiomis",
       "septyniomis", "aštuoniomis", "devyniomis"},
  }};

  t.teen_cardinal = {"dešimt",       "vienuolika",  "dvylika",
                     "trylika",      "keturiolika", "penkiolika",
                     "šešiolika",    "septyniolika", "aštuoniolika",
                     "devyniolika"};
  t.teen_cardinal_gen = {"dešimties",     "vienuolikos",  "dvylikos",
                         "trylikos",      "keturiolikos", "penkiolikos",
                         "šešiolikos",    "septyniolikos", "aštuoniolikos",
                         "devyniolikos"};
  t.tens_cardinal = {"dvidešimt",       "trisdešimt",      "keturiasdešimt",
                     "penkiasdešimt",   "šešiasdešimt",    "septyniasdešimt",
                     "aštuoniasdešimt", "devyniasdešimt"};
  t.tens_cardinal_gen = {"dvidešimties",       "trisdešimties",
                         "keturiasdešimties",  "penkiasdešimties",
                         "šešiasdešimties",    "septyniasdešimties",
                         "aštuoniasdešimties", "devyniasdešimties"};
  t.hundred_sg = {"šimtas", "šimto", "šimtą", "šimtu"};
  t.hundred_pl = {"šimtai", "šimtų", "šimtus", "šimtais"};

  // Simple (non-pronominal) ordinals; masc endings -as -o -ą -u,
  // fem -a -os -ą -a, with the irregular "trečias" paradigm for 3.
  const std::array<std::string, 9> ord_stem = {
      "pirm", "antr", "treč", "ketvirt", "penkt", "šešt", "septint",
      "aštunt", "devint"};
  t.digit_ordinal_stem = ord_stem;
  auto masc_ord = [&](const std::string& stem, Case c) {
    bool soft = stem == "treč";
    switch (c) {
      case Case::N: return stem + (soft ? "ias" : "as");
      case Case::G: return stem + (soft ? "io" : "o");
      case Case::A: return stem + (soft ? "ią" : "ą");
      case Case::I: return stem + (soft ? "iu" : "u");
    }
    return stem;
  };
  auto fem_ord = [&](const std::string& stem, Case c) {
    bool soft = stem == "treč";
    switch (c) {
      case Case::N: return stem + (soft ? "ia" : "a");
      case Case::G: return stem + (soft ? "ios" : "os");
      case Case::A: return stem + (soft ? "ią" : "ą");
      case Case::I: return stem + (soft ? "ia" : "a");
    }
    return stem;
  };
  for (int d = 0; d < 9; ++d) {
    for (Case c : kAllCases) {
      t.digit_ordinal[static_cast<int>(Gender::M)][static_cast<int>(c)][d] =
          masc_ord(ord_stem[d], c);
      t.digit_ordinal[static_cast<int>(Gender::F)][static_cast<int>(c)][d] =
          fem_ord(ord_stem[d], c);
    }
  }
  const std::array<std::string, 10> teen_ord_stem = {
      "dešimt",      "vienuolikt",  "dvylikt",     "trylikt",
      "keturiolikt", "penkiolikt",  "šešiolikt",   "septyniolikt",
      "aštuoniolikt", "devyniolikt"};
  const std::array<std::string, 8> tens_ord_stem = {
      "dvidešimt",       "trisdešimt",      "keturiasdešimt",
      "penkiasdešimt",   "šešiasdešimt",    "septyniasdešimt",
      "aštuoniasdešimt", "devyniasdešimt"};
  auto plain_ord = [](const std::string& stem, Case c, Gender g) {
    static const char* masc[4] = {"as", "o", "ą", "u"};
    static const char* fem[4] = {"a", "os", "ą", "a"};
    return stem + (g == Gender::M ? masc[static_cast<int>(c)]
                                  : fem[static_cast<int>(c)]);
  };
  for (int i = 0; i < 10; ++i)
    for (Case c : kAllCases)
      for (Gender g : {Gender::F, Gender::M})
        t.teen_ordinal[static_cast<int>(g)][static_cast<int>(c)][i] =
            plain_ord(teen_ord_stem[i], c, g);
  for (int i = 0; i < 8; ++i)
    for (Case c : kAllCases)
      for (Gender g : {Gender::F, Gender::M})
        t.tens_ordinal[static_cast<int>(g)][static_cast<int>(c)][i] =
            plain_ord(tens_ord_stem[i], c, g);

  // Roman numerals I..XXX with the agreement forms the ending rules need.
  static const char* kRoman[30] = {
      "I",    "II",    "III",   "IV",    "V",    "VI",    "VII",   "VIII",
      "IX",   "X",     "XI",    "XII",   "XIII", "XIV",   "XV",    "XVI",
      "XVII", "XVIII", "XIX",   "XX",    "XXI",  "XXII",  "XXIII", "XXIV",
      "XXV",  "XXVI",  "XXVII", "XXVIII", "XXIX", "XXX"};
  for (int n = 1; n <= 30; ++n) {
    LexiconTables::RomanForms rf;
    rf.roman = kRoman[n - 1];
    std::string prefix;
    int d = n;
    if (n >= 20) {
      prefix = t.tens_cardinal[n / 10 - 2];
      d = n % 10;
      if (d == 0) {
        const std::string& stem = tens_ord_stem[n / 10 - 2];
        rf.masc_nom = stem + "as";
        rf.masc_gen = stem + "o";
        rf.fem_nom = stem + "a";
        rf.fem_gen = stem + "os";
        rf.masc_nom_pl = stem + "i";
        rf.masc_loc = stem + "ame";
        rf.acc = stem + "ą";
        t.roman_ordinals.push_back(std::move(rf));
        continue;
      }
      prefix += " ";
    } else if (n >= 10) {
      const std::string& stem = teen_ord_stem[n - 10];
      rf.masc_nom = stem + "as";
      rf.masc_gen = stem + "o";
      rf.fem_nom = stem + "a";
      rf.fem_gen = stem + "os";
      rf.masc_nom_pl = stem + "i";
      rf.masc_loc = stem + "ame";
      rf.acc = stem + "ą";
      t.roman_ordinals.push_back(std::move(rf));
      continue;
    }
    const std::string& stem = ord_stem[d - 1];
    bool soft = stem == "treč";
    rf.masc_nom = prefix + stem + (soft ? "ias" : "as");
    rf.masc_gen = prefix + stem + (soft ? "io" : "o");
    rf.fem_nom = prefix + stem + (soft ? "ia" : "a");
    rf.fem_gen = prefix + stem + (soft ? "ios" : "os");
    rf.masc_nom_pl = prefix + (soft ? "tret" + std::string("i") : stem + "i");
    rf.masc_loc = prefix + stem + (soft ? "iame" : "ame");
    rf.acc = prefix + stem + (soft ? "ią" : "ą");
    t.roman_ordinals.push_back(std::move(rf));
  }

  t.ordinal_suffixes = {"as",  "ias", "a",    "o",   "os",  "ą",
                        "u",   "i",   "ų",    "us",  "ais", "ieji",
                        "ųjų", "asis", "oji", "ojo", "ąjį", "uoju"};

  // Units of measure. Abbreviation patterns consume a trailing period so
  // "21 min." expands to "minutės" without a stray dot. "m." (metai) and
  // bare "m" (metrai) are distinct entries; the nav profile swaps the
  // former to the metre paradigm.
  t.units.push_back(unit("mlrd", "mlrd\\b\\.?", Gender::M,
                         {"milijardas", "milijardo", "milijardą", "milijardu"},
                         {"milijardai", "milijardų", "milijardus",
                          "milijardais"},
                         false));
  t.units.push_back(unit("mln", "mln\\b\\.?", Gender::M,
                         {"milijonas", "milijono", "milijoną", "milijonu"},
                         {"milijonai", "milijonų", "milijonus", "milijonais"},
                         false));
  t.units.push_back(unit("tukst", "tūkst\\b\\.?", Gender::M,
                         {"tūkstantis", "tūkstančio", "tūkstantį",
                          "tūkstančiu"},
                         {"tūkstančiai", "tūkstančių", "tūkstančius",
                          "tūkstančiais"},
                         false));
  t.units.push_back(unit("km", "km\\b\\.?", Gender::M,
                         {"kilometras", "kilometro", "kilometrą", "kilometru"},
                         {"kilometrai", "kilometrų", "kilometrus",
                          "kilometrais"},
                         true));
  t.units.push_back(unit("m_dot", "m\\.", Gender::M,
                         {"metai", "metų", "metus", "metais"},
                         {"metai", "metų", "metus", "metais"}, true));
  t.units.push_back(unit("m", "m\\b", Gender::M,
                         {"metras", "metro", "metrą", "metru"},
                         {"metrai", "metrų", "metrus", "metrais"}, true));
  t.units.push_back(unit("val", "val\\b\\.?", Gender::F,
                         {"valanda", "valandos", "valandą", "valanda"},
                         {"valandos", "valandų", "valandas", "valandomis"},
                         true));
  t.units.push_back(unit("min", "min\\b\\.?", Gender::F,
                         {"minutė", "minutės", "minutę", "minute"},
                         {"minutės", "minučių", "minutes", "minutėmis"},
                         true));
  t.units.push_back(unit("sek", "sek\\b\\.?", Gender::F,
                         {"sekundė", "sekundės", "sekundę", "sekunde"},
                         {"sekundės", "sekundžių", "sekundes", "sekundėmis"},
                         true));
  t.units.push_back(unit("s", "s\\b\\.?", Gender::F,
                         {"sekundė", "sekundės", "sekundę", "sekunde"},
                         {"sekundės", "sekundžių", "sekundes", "sekundėmis"},
                         true));
  t.units.push_back(unit("Lt", "Lt\\b\\.?", Gender::M,
                         {"litas", "lito", "litą", "litu"},
                         {"litai", "litų", "litus", "litais"}, false));
  t.units.push_back(unit("Eur", "Eur\\b\\.?", Gender::M,
                         {"euras", "euro", "eurą", "euru"},
                         {"eurai", "eurų", "eurus", "eurais"}, false));
  t.units.push_back(unit("proc", "proc\\b\\.?", Gender::M,
                         {"procentas", "procento", "procentą", "procentu"},
                         {"procentai", "procentų", "procentus", "procentais"},
                         false));
  t.units.push_back(unit("pct", "%", Gender::M,
                         {"procentas", "procento", "procentą", "procentu"},
                         {"procentai", "procentų", "procentus", "procentais"},
                         false));
  t.units.push_back(unit("degC", "°C\\b", Gender::M,
                         {"laipsnis Celsijaus", "laipsnio Celsijaus",
                          "laipsnį Celsijaus", "laipsniu Celsijaus"},
                         {"laipsniai Celsijaus", "laipsnių Celsijaus",
                          "laipsnius Celsijaus", "laipsniais Celsijaus"},
                         false));
  t.units.push_back(unit("g_dot", "g\\.", Gender::M,
                         {"gramas", "gramo", "gramą", "gramu"},
                         {"gramai", "gramų", "gramus", "gramais"}, false));
  t.units.push_back(unit("p_dot", "p\\.", Gender::M,
                         {"puslapis", "puslapio", "puslapį", "puslapiu"},
                         {"puslapiai", "puslapių", "puslapius", "puslapiais"},
                         false));
  t.units.push_back(unit("d_dot", "d\\.", Gender::F,
                         {"diena", "dienos", "dieną", "diena"},
                         {"dienos", "dienų", "dienas", "dienomis"}, true));
  t.units.push_back(unit("sav", "sav\\b\\.?", Gender::F,
                         {"savaitė", "savaitės", "savaitę", "savaite"},
                         {"savaitės", "savaičių", "savaites", "savaitėmis"},
                         true));
  t.units.push_back(unit("men", "mėn\\b\\.?", Gender::M,
                         {"mėnuo", "mėnesio", "mėnesį", "mėnesiu"},
                         {"mėnesiai", "mėnesių", "mėnesius", "mėnesiais"},
                         true));

  t.spell_stops = "bcdgptvzčžBCDGPTVZČŽ";
  t.spell_continuants = "flmnrsšFLMNRSŠ";
  return t;
}

}  // namespace

const LexiconTables& lexicon() {
  static const LexiconTables tables = build_tables();
  return tables;
}

std::string digit_word(int d, Case c, Gender g) {
  return lexicon().digit_cardinal[static_cast<int>(g)][static_cast<int>(c)]
                                 [d - 1];
}

std::string teen_word(int n, Case c) {
  const auto& t = lexicon();
  return c == Case::G ? t.teen_cardinal_gen[n - 10] : t.teen_cardinal[n - 10];
}

std::string tens_word(int n, Case c) {
  const auto& t = lexicon();
  return c == Case::G ? t.tens_cardinal_gen[n / 10 - 2]
                      : t.tens_cardinal[n / 10 - 2];
}

std::string hundreds_words(int h, Case c) {
  const auto& t = lexicon();
  int mult = h / 100;
  if (mult == 1) return t.hundred_sg[static_cast<int>(c)];
  return digit_word(mult, c, Gender::M) + " " +
         t.hundred_pl[static_cast<int>(c)];
}

std::string digit_ordinal_word(int d, Case c, Gender g) {
  return lexicon().digit_ordinal[static_cast<int>(g)][static_cast<int>(c)]
                                [d - 1];
}

std::string teen_ordinal_word(int n, Case c, Gender g) {
  return lexicon().teen_ordinal[static_cast<int>(g)][static_cast<int>(c)]
                               [n - 10];
}

std::string tens_ordinal_word(int n, Case c, Gender g) {
  return lexicon().tens_ordinal[static_cast<int>(g)][static_cast<int>(c)]
                               [n / 10 - 2];
}

std::string ordinal_with_suffix(int digit, const std::string& suffix) {
  const std::string& stem = lexicon().digit_ordinal_stem[digit - 1];
  if (digit == 3) {
    // trečias declines with a soft stem; nominative plural is irregular
    if (suffix == "ieji") return "tretieji";
    if (suffix == "i") return "treti";
    if (!suffix.empty() && suffix[0] == 'i') return stem + suffix;
    return stem + "i" + suffix;
  }
  return stem + suffix;
}

namespace {

std::string join_alt(const std::array<std::string, 12>& words, bool anycase) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += "|";
    if (anycase) {
      std::string rest = w;
      // first character of every month name is a single-byte letter? no:
      // all twelve start with ASCII letters except none do with multibyte,
      // so uppercase variant is safe to build bytewise
      char lower = rest[0];
      char upper = static_cast<char>(lower - 'a' + 'A');
      out += "[" + std::string(1, lower) + std::string(1, upper) + "]" +
             rest.substr(1);
    } else {
      out += w;
    }
  }
  return out;
}

}  // namespace

std::string months_genitive_alt() {
  return join_alt(lexicon().months_genitive, false);
}

std::string months_genitive_alt_anycase() {
  return join_alt(lexicon().months_genitive, true);
}

std::string months_nominative_alt() {
  return join_alt(lexicon().months_nominative, false);
}

}  // namespace ltnorm
