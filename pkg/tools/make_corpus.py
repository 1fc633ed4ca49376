#!/usr/bin/env python3
"""Generate the bundled synthetic STTS-tagged German corpora.

The output is produced by a small stochastic grammar with a hand-written
lexicon, seeded for reproducibility. Digit-sequence numbers are tagged CARD
as in the original STTS; the toolkit's remap step converts them to CARDNUM.

    python tools/make_corpus.py            # rewrites src/sttstag/data/*.vrt

The generated files are released under CC0.
"""
import argparse
import random
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "sttstag" / "data"

# -- lexical material --------------------------------------------------------

# (singular, plural, gender)
NOUNS_NEWS = [
    ("Stadt", "Städte", "f"), ("Regierung", "Regierungen", "f"), ("Partei", "Parteien", "f"),
    ("Minister", "Minister", "m"), ("Bürgermeister", "Bürgermeister", "m"),
    ("Jahr", "Jahre", "n"), ("Haus", "Häuser", "n"), ("Geld", "Gelder", "n"),
    ("Frage", "Fragen", "f"), ("Woche", "Wochen", "f"), ("Million", "Millionen", "f"),
    ("Mark", "Mark", "f"), ("Prozent", "Prozent", "n"), ("Polizei", "Polizeien", "f"),
    ("Plan", "Pläne", "m"), ("Vorschlag", "Vorschläge", "m"), ("Bericht", "Berichte", "m"),
    ("Markt", "Märkte", "m"), ("Unternehmen", "Unternehmen", "n"), ("Firma", "Firmen", "f"),
    ("Gericht", "Gerichte", "n"), ("Gesetz", "Gesetze", "n"), ("Land", "Länder", "n"),
    ("Bürger", "Bürger", "m"), ("Mitarbeiter", "Mitarbeiter", "m"), ("Kind", "Kinder", "n"),
    ("Schule", "Schulen", "f"), ("Lehrer", "Lehrer", "m"), ("Wohnung", "Wohnungen", "f"),
    ("Mieter", "Mieter", "m"), ("Verkehr", "Verkehre", "m"), ("Straße", "Straßen", "f"),
    ("Bahn", "Bahnen", "f"), ("Problem", "Probleme", "n"), ("Sitzung", "Sitzungen", "f"),
    ("Entscheidung", "Entscheidungen", "f"), ("Verwaltung", "Verwaltungen", "f"),
    ("Ausstellung", "Ausstellungen", "f"), ("Künstler", "Künstler", "m"), ("Theater", "Theater", "n"),
    ("Spiel", "Spiele", "n"), ("Mannschaft", "Mannschaften", "f"), ("Trainer", "Trainer", "m"),
    ("Tor", "Tore", "n"), ("Saison", "Saisons", "f"), ("Zeit", "Zeiten", "f"),
    ("Arbeit", "Arbeiten", "f"), ("Betrieb", "Betriebe", "m"), ("Gewerkschaft", "Gewerkschaften", "f"),
    ("Streik", "Streiks", "m"), ("Lohn", "Löhne", "m"), ("Preis", "Preise", "m"),
    ("Kosten", "Kosten", "pl"), ("Leute", "Leute", "pl"), ("Sprecher", "Sprecher", "m"),
    ("Sprecherin", "Sprecherinnen", "f"), ("Vorsitzende", "Vorsitzenden", "m"),
    ("Krankenhaus", "Krankenhäuser", "n"), ("Arzt", "Ärzte", "m"), ("Patient", "Patienten", "m"),
    ("Umwelt", "Umwelten", "f"), ("Energie", "Energien", "f"), ("Strom", "Ströme", "m"),
    ("Weber", "Weber", "m"), ("Fischer", "Fischer", "m"), ("Koch", "Köche", "m"),
    ("Bauer", "Bauern", "m"), ("Müller", "Müller", "m"), ("Richter", "Richter", "m"),
    ("Wahl", "Wahlen", "f"), ("Stimme", "Stimmen", "f"), ("Abgeordnete", "Abgeordneten", "m"),
    ("Haushalt", "Haushalte", "m"), ("Steuer", "Steuern", "f"), ("Zeitung", "Zeitungen", "f"),
    ("Kritik", "Kritiken", "f"), ("Forderung", "Forderungen", "f"), ("Ende", "Enden", "n"),
    ("Anfang", "Anfänge", "m"), ("Tag", "Tage", "m"), ("Monat", "Monate", "m"),
    ("Management", "Managements", "n"),
]

NOUNS_ADMIN = [
    ("Universität", "Universitäten", "f"), ("Fakultät", "Fakultäten", "f"),
    ("Semester", "Semester", "n"), ("Prüfung", "Prüfungen", "f"), ("Studium", "Studien", "n"),
    ("Gebühr", "Gebühren", "f"), ("Immatrikulation", "Immatrikulationen", "f"),
    ("Anmeldung", "Anmeldungen", "f"), ("Frist", "Fristen", "f"), ("Antrag", "Anträge", "m"),
    ("Verordnung", "Verordnungen", "f"), ("Reglement", "Reglemente", "n"),
    ("Dozent", "Dozenten", "m"), ("Professor", "Professoren", "m"), ("Institut", "Institute", "n"),
    ("Bibliothek", "Bibliotheken", "f"), ("Kommission", "Kommissionen", "f"),
    ("Jahresbericht", "Jahresberichte", "m"), ("Rektor", "Rektoren", "m"),
    ("Senat", "Senate", "m"), ("Abteilung", "Abteilungen", "f"), ("Ausweis", "Ausweise", "m"),
    ("Kanzlei", "Kanzleien", "f"), ("Bescheinigung", "Bescheinigungen", "f"),
    ("Zulassung", "Zulassungen", "f"), ("Vorlesung", "Vorlesungen", "f"),
    ("Forschung", "Forschungen", "f"), ("Lehre", "Lehren", "f"), ("Budget", "Budgets", "n"),
    ("Management", "Managements", "n"), ("Jahr", "Jahre", "n"), ("Frage", "Fragen", "f"),
    ("Verwaltung", "Verwaltungen", "f"), ("Mitarbeiter", "Mitarbeiter", "m"),
    ("Entscheidung", "Entscheidungen", "f"), ("Bericht", "Berichte", "m"), ("Zeit", "Zeiten", "f"),
]

COMPOUND_HEADS = [
    ("Politik", "Politiken", "f"), ("Amt", "Ämter", "n"), ("Bau", "Bauten", "m"),
    ("Verband", "Verbände", "m"), ("Rat", "Räte", "m"), ("Gesetz", "Gesetze", "n"),
    ("Plan", "Pläne", "m"), ("Leiter", "Leiter", "m"), ("Leiterin", "Leiterinnen", "f"),
    ("Projekt", "Projekte", "n"), ("Programm", "Programme", "n"), ("Gebiet", "Gebiete", "n"),
    ("Verwaltung", "Verwaltungen", "f"), ("Zentrum", "Zentren", "n"), ("Anlage", "Anlagen", "f"),
    ("Vertrag", "Verträge", "m"), ("Kommission", "Kommissionen", "f"), ("Netz", "Netze", "n"),
    ("Gesellschaft", "Gesellschaften", "f"), ("Versorgung", "Versorgungen", "f"),
    ("Förderung", "Förderungen", "f"), ("Ordnung", "Ordnungen", "f"), ("Bereich", "Bereiche", "m"),
    ("Dezernent", "Dezernenten", "m"), ("Betrag", "Beträge", "m"), ("Konzept", "Konzepte", "n"),
]
COMPOUND_MODIFIERS = [
    "Stadt", "Landes", "Bundes", "Verkehrs", "Wohnungs", "Arbeits", "Schul", "Kultur",
    "Umwelt", "Sozial", "Finanz", "Bau", "Wirtschafts", "Sport", "Jugend", "Kinder",
    "Energie", "Gesundheits", "Sicherheits", "Haushalts", "Personal", "Planungs", "Verwaltungs",
    "Friedens", "Europa", "Kreis", "Orts", "Miet", "Flughafen", "Müll", "Wasser", "Kranken",
    "Forschungs", "Hochschul", "Studien", "Prüfungs", "Gebühren", "Semester", "Lehr",
]

FIRST_NAMES = ["Peter", "Hans", "Klaus", "Monika", "Andrea", "Michael", "Thomas", "Gabriele",
               "Wolfgang", "Ursula", "Jürgen", "Petra", "Helmut", "Renate", "Stefan", "Karin"]
SURNAMES = ["Weber", "Fischer", "Schneider", "Koch", "Bauer", "Müller", "Richter", "Wagner",
            "Becker", "Hoffmann", "Schulz", "Krämer", "Vogel", "Lehmann", "Hartmann", "Brandt",
            "Eichel", "Wallmann", "Roth", "Seehofer", "Kohl", "Scharping", "Lafontaine", "Fischbach",
            "Zimmermann", "Neumann", "Schwarz", "Kühn", "Lorenz", "Arndt", "Gerhardt", "Dörr"]
PLACES = ["Frankfurt", "Berlin", "Hessen", "Bonn", "Wiesbaden", "Offenbach", "Darmstadt",
          "München", "Hamburg", "Europa", "Deutschland", "Bayern", "Zürich", "Mainz", "Kassel",
          "Sachsenhausen", "Bockenheim", "Höchst", "Eschborn", "Bornheim", "Rödelheim"]
ORGS = ["SPD", "CDU", "FDP", "Grünen", "IG Metall", "Bundesbank", "Eintracht", "Lufthansa", "ÖTV"]
MONTHS = ["Januar", "Februar", "März", "April", "Mai", "Juni", "Juli", "August", "September",
          "Oktober", "November", "Dezember"]

# stem, ADJD form is the stem
ADJECTIVES = ["groß", "klein", "neu", "alt", "wichtig", "deutsch", "politisch", "hoch", "lang",
              "schwer", "gut", "schlecht", "öffentlich", "städtisch", "sozial", "frei", "erst",
              "letzt", "weit", "jung", "stark", "schnell", "einzig", "möglich", "klar", "offen",
              "genau", "kritisch", "zuständig", "bekannt", "sicher", "teuer", "billig", "europäisch",
              "wirtschaftlich", "künftig", "gemeinsam", "ehemalig", "zusätzlich", "ähnlich"]
ADJ_IRREG = {"hoch": "hoh", "teuer": "teur"}

# infinitive, 3sg present, participle, 3sg preterite, transitive, separable prefix
VERBS = [
    ("machen", "macht", "gemacht", "machte", True, None),
    ("fordern", "fordert", "gefordert", "forderte", True, None),
    ("kritisieren", "kritisiert", "kritisiert", "kritisierte", True, None),
    ("planen", "plant", "geplant", "plante", True, None),
    ("bauen", "baut", "gebaut", "baute", True, None),
    ("zahlen", "zahlt", "gezahlt", "zahlte", True, None),
    ("kaufen", "kauft", "gekauft", "kaufte", True, None),
    ("verkaufen", "verkauft", "verkauft", "verkaufte", True, None),
    ("erklären", "erklärt", "erklärt", "erklärte", True, None),
    ("bezahlen", "bezahlt", "bezahlt", "bezahlte", True, None),
    ("finanzieren", "finanziert", "finanziert", "finanzierte", True, None),
    ("diskutieren", "diskutiert", "diskutiert", "diskutierte", True, None),
    ("organisieren", "organisiert", "organisiert", "organisierte", True, None),
    ("unterstützen", "unterstützt", "unterstützt", "unterstützte", True, None),
    ("beschließen", "beschließt", "beschlossen", "beschloss", True, None),
    ("geben", "gibt", "gegeben", "gab", True, None),
    ("nehmen", "nimmt", "genommen", "nahm", True, None),
    ("sehen", "sieht", "gesehen", "sah", True, None),
    ("finden", "findet", "gefunden", "fand", True, None),
    ("kennen", "kennt", "gekannt", "kannte", True, None),
    ("brauchen", "braucht", "gebraucht", "brauchte", True, None),
    ("erhalten", "erhält", "erhalten", "erhielt", True, None),
    ("verlieren", "verliert", "verloren", "verlor", True, None),
    ("gewinnen", "gewinnt", "gewonnen", "gewann", True, None),
    ("lösen", "löst", "gelöst", "löste", True, None),
    ("prüfen", "prüft", "geprüft", "prüfte", True, None),
    ("verlangen", "verlangt", "verlangt", "verlangte", True, None),
    ("schaffen", "schafft", "geschafft", "schaffte", True, None),
    ("stellen", "stellt", "gestellt", "stellte", True, None),
    ("halten", "hält", "gehalten", "hielt", True, None),
    ("begrüßen", "begrüßt", "begrüßt", "begrüßte", True, None),
    ("ablehnen", "lehnt", "abgelehnt", "lehnte", True, "ab"),
    ("ankündigen", "kündigt", "angekündigt", "kündigte", True, "an"),
    ("vorstellen", "stellt", "vorgestellt", "stellte", True, "vor"),
    ("einführen", "führt", "eingeführt", "führte", True, "ein"),
    ("vorlegen", "legt", "vorgelegt", "legte", True, "vor"),
    ("aufnehmen", "nimmt", "aufgenommen", "nahm", True, "auf"),
    ("kommen", "kommt", "gekommen", "kam", False, None),
    ("arbeiten", "arbeitet", "gearbeitet", "arbeitete", False, None),
    ("warten", "wartet", "gewartet", "wartete", False, None),
    ("steigen", "steigt", "gestiegen", "stieg", False, None),
    ("sinken", "sinkt", "gesunken", "sank", False, None),
    ("protestieren", "protestiert", "protestiert", "protestierte", False, None),
    ("streiken", "streikt", "gestreikt", "streikte", False, None),
    ("beginnen", "beginnt", "begonnen", "begann", False, None),
    ("zurücktreten", "tritt", "zurückgetreten", "trat", False, "zurück"),
    ("studieren", "studiert", "studiert", "studierte", True, None),
    ("einreichen", "reicht", "eingereicht", "reichte", True, "ein"),
    ("beantragen", "beantragt", "beantragt", "beantragte", True, None),
    ("bestehen", "besteht", "bestanden", "bestand", True, None),
    ("genehmigen", "genehmigt", "genehmigt", "genehmigte", True, None),
    ("regeln", "regelt", "geregelt", "regelte", True, None),
    ("verlängern", "verlängert", "verlängert", "verlängerte", True, None),
]
SAY_VERBS = [("sagte", "VVFIN"), ("erklärte", "VVFIN"), ("betonte", "VVFIN"), ("meinte", "VVFIN"),
             ("sagt", "VVFIN"), ("kritisierte", "VVFIN"), ("berichtete", "VVFIN")]

ADVERBS = ["auch", "noch", "schon", "nur", "jetzt", "heute", "bereits", "sehr", "dann", "so",
           "hier", "wieder", "immer", "bisher", "inzwischen", "allerdings", "vor allem", "damals",
           "gestern", "morgen", "nun", "kaum", "etwa", "zudem", "außerdem", "jedoch", "deshalb"]
LETTER_NUMBERS = ["zwei", "drei", "vier", "fünf", "sechs", "zehn", "zwölf", "zwanzig", "hundert",
                  "tausend", "dreißig", "acht"]
PREPS_DAT = ["in", "mit", "nach", "von", "bei", "aus", "seit", "vor", "zu"]
PREPS_ACC = ["für", "gegen", "über", "durch", "ohne", "um"]
APPRART = {("in", "m"): "im", ("in", "n"): "im", ("an", "m"): "am", ("an", "n"): "am",
           ("zu", "m"): "zum", ("zu", "n"): "zum", ("zu", "f"): "zur", ("von", "m"): "vom",
           ("von", "n"): "vom", ("bei", "m"): "beim", ("bei", "n"): "beim"}

DEF = {"nom": {"m": "der", "f": "die", "n": "das", "pl": "die"},
       "acc": {"m": "den", "f": "die", "n": "das", "pl": "die"},
       "dat": {"m": "dem", "f": "der", "n": "dem", "pl": "den"}}
INDEF = {"nom": {"m": "ein", "f": "eine", "n": "ein"},
         "acc": {"m": "einen", "f": "eine", "n": "ein"},
         "dat": {"m": "einem", "f": "einer", "n": "einem"}}
DEM = {"nom": {"m": "dieser", "f": "diese", "n": "dieses", "pl": "diese"},
       "acc": {"m": "diesen", "f": "diese", "n": "dieses", "pl": "diese"},
       "dat": {"m": "diesem", "f": "dieser", "n": "diesem", "pl": "diesen"}}
POSS = {"nom": {"m": "", "f": "e", "n": "", "pl": "e"},
        "acc": {"m": "en", "f": "e", "n": "", "pl": "e"},
        "dat": {"m": "em", "f": "er", "n": "em", "pl": "en"}}
PRONOUNS = {"sg": ["er", "sie", "es"], "pl": ["wir", "sie"]}
RELS = {"nom": {"m": "der", "f": "die", "n": "das", "pl": "die"},
        "acc": {"m": "den", "f": "die", "n": "das", "pl": "die"}}


class Gen:
    def __init__(self, seed, nouns, compound_rate, name_rate):
        self.r = random.Random(seed)
        self.nouns = nouns
        self.compound_rate = compound_rate
        self.name_rate = name_rate

    def zipf(self, items, s=1.0):
        weights = [1.0 / (i + 1) ** s for i in range(len(items))]
        return self.r.choices(items, weights)[0]

    def p(self, prob):
        return self.r.random() < prob

    # -- noun phrases --------------------------------------------------------

    def noun(self):
        if self.p(self.compound_rate):
            mod = self.zipf(COMPOUND_MODIFIERS, 0.6)
            sg, pl, g = self.zipf(COMPOUND_HEADS, 0.7)
            return mod + sg.lower(), mod + pl.lower(), g
        return self.zipf(self.nouns, 0.9)

    def adja(self, ending):
        stem = self.zipf(ADJECTIVES, 0.8)
        stem = ADJ_IRREG.get(stem, stem)
        return stem + ending

    def name(self):
        k = self.r.random()
        if k < 0.45:
            toks = []
            if self.p(0.5):
                toks.append((self.zipf(FIRST_NAMES), "NE"))
            toks.append((self.zipf(SURNAMES, 0.7), "NE"))
            return toks
        if k < 0.8:
            return [(self.zipf(PLACES, 0.8), "NE")]
        org = self.zipf(ORGS)
        return [(w, "NE") for w in org.split()]

    def np(self, case="nom", number=None, allow_pron=True):
        r = self.r.random()
        if allow_pron and r < 0.15 and case != "dat":
            num = number or self.r.choice(["sg", "pl"])
            form = self.r.choice(PRONOUNS[num])
            if case == "acc":
                form = {"er": "ihn", "wir": "uns"}.get(form, form)
            return [(form, "PPER")], num
        if r < 0.15 + self.name_rate:
            toks = self.name()
            if self.p(0.25):
                toks = [("Herr" if self.p(0.6) else "Frau", "NN")] + toks
            return toks, "sg"
        sg, pl, g = self.noun()
        if number is None:
            number = "pl" if (g == "pl" or self.p(0.3)) else "sg"
        if g == "pl":
            number = "pl"
        gkey = "pl" if number == "pl" else g
        nform = pl if number == "pl" else sg
        if number == "pl" and case == "dat" and not nform.endswith(("n", "s")):
            nform += "n"
        toks = []
        det = self.r.random()
        if det < 0.55:
            toks.append((DEF[case][gkey], "ART"))
            if self.p(0.3):
                end = "e" if (case == "nom" and number == "sg") or (case == "acc" and g in "fn" and number == "sg") else "en"
                toks.append((self.adja(end), "ADJA"))
        elif det < 0.7 and number == "sg":
            toks.append((INDEF[case][g], "ART"))
            if self.p(0.3):
                end = {"nom": {"m": "er", "f": "e", "n": "es"}, "acc": {"m": "en", "f": "e", "n": "es"},
                       "dat": {"m": "en", "f": "en", "n": "en"}}[case][g]
                toks.append((self.adja(end), "ADJA"))
        elif det < 0.78:
            toks.append((DEM[case][gkey], "PDAT"))
        elif det < 0.85:
            stem = self.r.choice(["sein", "ihr", "unser"])
            toks.append((stem + POSS[case][gkey], "PPOSAT"))
        elif number == "pl" and det < 0.93:
            if self.p(0.5):
                num = str(self.zipf([2, 3, 10, 20, 50, 100, 120, 300, 500, 1000, 1500, 2400, 4, 7, 15], 0.5)
                          * self.r.choice([1, 1, 1, 3, 7]))
                toks.append((num, "CARD"))
            elif self.p(0.5):
                toks.append((self.r.choice(LETTER_NUMBERS), "CARD"))
            else:
                toks.append((self.r.choice(["viele", "alle", "einige", "mehrere", "andere"]), "PIAT"))
            if self.p(0.25):
                toks.append((self.adja("en" if case == "dat" else "e"), "ADJA"))
        elif number == "pl":
            if self.p(0.3):
                toks.append((self.adja("en" if case == "dat" else "e"), "ADJA"))
        else:
            toks.append((DEF[case][gkey], "ART"))
        toks.append((nform, "NN"))
        if self.p(0.12):
            toks += self.pp(attached=True)
        elif self.p(0.08) and case != "dat":
            toks += self.genitive()
        return toks, number

    def genitive(self):
        sg, pl, g = self.noun()
        if g == "pl":
            return [("der", "ART"), (pl, "NN")]
        if g == "f":
            return [("der", "ART"), (sg, "NN")]
        suffix = "es" if sg.endswith(("s", "z", "ß")) else "s"
        if sg.endswith(("e", "er", "el", "en")):
            suffix = "s"
        return [("des", "ART"), (sg + suffix, "NN")]

    def pp(self, attached=False):
        r = self.r.random()
        if r < 0.12:
            return [("am", "APPRART"), (f"{self.r.randint(1, 31)}.", "ADJA"), (self.r.choice(MONTHS), "NN")]
        if r < 0.2:
            return [("in", "APPR"), (self.zipf(PLACES, 0.8), "NE")]
        if r < 0.27 and not attached:
            year = str(self.r.randint(1960, 1999))
            if self.p(0.5):
                return [(self.r.choice(["seit", "bis"]), "APPR"), (year, "CARD")]
            return [("im", "APPRART"), ("Jahr", "NN"), (year, "CARD")]
        if r < 0.6:
            prep = self.r.choice(PREPS_DAT)
            sg, pl, g = self.noun()
            if g != "pl" and (prep, g) in APPRART and self.p(0.6):
                toks = [(APPRART[(prep, g)], "APPRART")]
                if self.p(0.2):
                    toks.append((self.adja("en"), "ADJA"))
                return toks + [(sg, "NN")]
            np, _ = self.np("dat", allow_pron=False)
            return [(prep, "APPR")] + np
        prep = self.r.choice(PREPS_ACC)
        np, _ = self.np("acc", allow_pron=False)
        return [(prep, "APPR")] + np

    # -- verbs ---------------------------------------------------------------

    def verb(self, transitive=None):
        while True:
            v = self.zipf(VERBS, 0.6)
            if transitive is None or v[4] == transitive or (transitive and v[4]):
                return v

    def finite(self, v, number, tense="pres"):
        inf, sg3, pp, pret, trans, prefix = v
        base = inf[len(prefix):] if prefix else inf
        if tense == "pret":
            form = pret if number == "sg" else (pret + "n" if pret.endswith("e") else pret + "en")
        else:
            form = sg3 if number == "sg" else base
        return form

    def adverbs(self, prob=0.35):
        toks = []
        while self.p(prob) and len(toks) < 2:
            a = self.zipf(ADVERBS, 0.7)
            if a == "vor allem":
                toks += [("vor", "APPR"), ("allem", "PIS")]
            else:
                toks.append((a, "ADV"))
            prob /= 2
        if self.p(0.06):
            toks.append(("nicht", "PTKNEG"))
        return toks

    # -- clauses -------------------------------------------------------------

    def main_clause(self):
        k = self.r.random()
        subj, num = self.np("nom")
        if k < 0.25:  # simple present/preterite
            v = self.verb()
            tense = "pret" if self.p(0.4) else "pres"
            toks = subj + [(self.finite(v, num, tense), "VVFIN")] + self.adverbs()
            if v[4]:
                toks += self.np("acc")[0]
            if self.p(0.4):
                toks += self.pp()
            if v[5]:
                toks.append((v[5], "PTKVZ"))
            return toks
        if k < 0.45:  # modal + infinitive
            modal = self.r.choice([("kann", "können"), ("muss", "müssen"), ("soll", "sollen"),
                                   ("will", "wollen"), ("sollte", "sollten"), ("könnte", "könnten")])
            v = self.verb()
            toks = subj + [(modal[0] if num == "sg" else modal[1], "VMFIN")] + self.adverbs()
            if v[4]:
                toks += self.np("acc")[0]
            if self.p(0.3):
                toks += self.pp()
            toks.append((v[0], "VVINF"))
            return toks
        if k < 0.65:  # perfect / passive
            v = self.verb()
            if v[4] and self.p(0.35):
                aux = "wird" if num == "sg" else "werden"
                toks = subj + [(aux, "VAFIN")] + self.adverbs()
                if self.p(0.5):
                    toks += self.pp()
                toks.append((v[2], "VVPP"))
                return toks
            aux = ("hat" if num == "sg" else "haben") if v[4] or v[0] in ("arbeiten", "warten", "protestieren", "streiken") \
                else ("ist" if num == "sg" else "sind")
            toks = subj + [(aux, "VAFIN")] + self.adverbs()
            if v[4]:
                toks += self.np("acc")[0]
            if self.p(0.3):
                toks += self.pp()
            toks.append((v[2], "VVPP"))
            return toks
        if k < 0.75:  # predicative
            aux = "ist" if num == "sg" else "sind"
            if self.p(0.3):
                aux = "war" if num == "sg" else "waren"
            adj = self.zipf(ADJECTIVES, 0.8)
            toks = subj + [(aux, "VAFIN")] + self.adverbs(0.5) + [(adj, "ADJD")]
            return toks
        if k < 0.85:  # fronted PP / adverb
            front = self.pp() if self.p(0.6) else [(self.zipf(ADVERBS[:12]), "ADV")]
            v = self.verb()
            toks = front + [(self.finite(v, num, "pret" if self.p(0.4) else "pres"), "VVFIN")] + subj
            if v[4]:
                toks += self.np("acc")[0]
            if v[5]:
                toks.append((v[5], "PTKVZ"))
            return toks
        # werden-future
        v = self.verb()
        toks = subj + [("wird" if num == "sg" else "werden", "VAFIN")] + self.adverbs()
        if v[4]:
            toks += self.np("acc")[0]
        toks.append((v[0], "VVINF"))
        return toks

    def sub_clause(self):
        conj = self.r.choice([("dass", "KOUS"), ("weil", "KOUS"), ("wenn", "KOUS"), ("ob", "KOUS"),
                              ("da", "KOUS"), ("als", "KOUS"), ("obwohl", "KOUS")])
        subj, num = self.np("nom")
        v = self.verb()
        toks = [conj] + subj + self.adverbs(0.3)
        if v[4]:
            toks += self.np("acc", allow_pron=False)[0]
        k = self.r.random()
        if k < 0.55:
            form = self.finite(v, num, "pret" if self.p(0.3) else "pres")
            if v[5]:
                form = v[5] + form
            toks.append((form, "VVFIN"))
        elif k < 0.8:
            toks += [(v[2], "VVPP"), ("hat" if num == "sg" else "haben", "VAFIN")]
        else:
            modal = ("kann", "können") if self.p(0.5) else ("muss", "müssen")
            toks += [(v[0], "VVINF"), (modal[0] if num == "sg" else modal[1], "VMFIN")]
        return toks

    def zu_clause(self):
        v = self.verb(transitive=True)
        toks = []
        if self.p(0.3):
            toks.append(("um", "KOUI"))
        toks += self.np("acc", allow_pron=False)[0]
        if v[5]:
            toks.append((v[5] + "zu" + v[0][len(v[5]):], "VVIZU"))
        else:
            toks += [("zu", "PTKZU"), (v[0], "VVINF")]
        return toks

    def rel_clause(self, head_num="sg", head_g="m"):
        case = "nom" if self.p(0.6) else "acc"
        gkey = "pl" if head_num == "pl" else head_g
        toks = [(RELS[case][gkey], "PRELS")]
        v = self.verb(transitive=True)
        if case == "nom":
            toks += self.np("acc", allow_pron=False)[0]
            toks.append((self.finite(v, head_num), "VVFIN"))
        else:
            subj, num = self.np("nom")
            toks += subj + [(self.finite(v, num), "VVFIN")]
        return toks

    def sentence(self):
        k = self.r.random()
        if k < 0.42:
            toks = self.main_clause()
        elif k < 0.57:
            toks = self.main_clause() + [(",", "$,")] + self.sub_clause()
        elif k < 0.65:
            toks = self.sub_clause() + [(",", "$,")]
            main = self.main_clause()
            # verb-second after a fronted clause: move the finite verb first
            fin = next((i for i, (_, t) in enumerate(main) if t.endswith("FIN")), None)
            if fin is not None:
                main = [main[fin]] + main[:fin] + main[fin + 1:]
            toks += main
        elif k < 0.73:
            subj, num = self.np("nom")
            v = self.r.choice([("versucht", "VVFIN"), ("plant", "VVFIN"), ("beschloss", "VVFIN"),
                               ("hofft", "VVFIN"), ("empfahl", "VVFIN")])
            if num == "pl":
                v = ({"versucht": "versuchen", "plant": "planen", "beschloss": "beschlossen",
                      "hofft": "hoffen", "empfahl": "empfahlen"}[v[0]], "VVFIN")
            toks = subj + [v] + self.adverbs(0.2) + [(",", "$,")] + self.zu_clause()
        elif k < 0.81:
            sg, pl, g = self.noun()
            num = "pl" if g == "pl" else "sg"
            gkey = "pl" if num == "pl" else g
            head = [(DEF["nom"][gkey], "ART"), (pl if num == "pl" else sg, "NN")]
            v = self.verb()
            rest = [(self.finite(v, num), "VVFIN")] + self.adverbs()
            if v[4]:
                rest += self.np("acc")[0]
            if v[5]:
                rest.append((v[5], "PTKVZ"))
            toks = head + [(",", "$,")] + self.rel_clause(num, "m" if g == "pl" else g) + [(",", "$,")] + rest
        elif k < 0.89:
            speaker = self.name()
            if self.p(0.4):
                speaker = [("Herr" if self.p(0.5) else "Frau", "NN")] + speaker
            say = self.r.choice(SAY_VERBS)
            if self.p(0.5):
                toks = [say] + speaker
                if self.p(0.3):
                    toks += [("(", "$("), (self.r.choice(ORGS[:4]), "NE"), (")", "$(")]
                toks = [("„", "$(")] + self.main_clause() + [("“", "$("), (",", "$,")] + toks
            else:
                toks = speaker + [say] + [(",", "$,")] + self.sub_clause()
        elif k < 0.94:
            a, _ = self.np("nom")
            b, _ = self.np("nom")
            toks = a + [(self.r.choice(["und", "oder"]), "KON")] + b
            toks += [("sind" if self.p(0.5) else "waren", "VAFIN")] + self.adverbs(0.5)
            toks.append((self.zipf(ADJECTIVES), "ADJD"))
            if self.p(0.3):
                toks += [("als", "KOKOM")] + self.np("nom", allow_pron=False)[0]
        elif k < 0.97:
            amount = self.r.choice(["3,5", "1,2", "12,8", "0,5", "2,75", "14,3", "7,1"])
            subj, num = self.np("nom")
            toks = subj + [("hat" if num == "sg" else "haben", "VAFIN"), (amount, "CARD"),
                           (self.r.choice(["Millionen", "Milliarden"]), "NN"),
                           (self.r.choice(["Mark", "Franken"]), "NN")] + self.pp() + \
                [(self.r.choice(["ausgegeben", "erhalten", "gezahlt", "investiert"]), "VVPP")]
        else:
            toks = self.main_clause() + [(",", "$,"), (self.r.choice(["aber", "und"]), "KON")] + self.main_clause()
        # capitalize the sentence-initial word
        if toks[0][1] not in ("NN", "NE", "$(") and toks[0][0][0].islower():
            toks[0] = (toks[0][0][0].upper() + toks[0][0][1:], toks[0][1])
        end = "?" if self.p(0.03) else ("!" if self.p(0.01) else ".")
        toks.append((end, "$."))
        return toks


def generate(seed, ntokens, nouns, compound_rate, name_rate):
    g = Gen(seed, nouns, compound_rate, name_rate)
    sents, total = [], 0
    while total < ntokens:
        s = g.sentence()
        sents.append(s)
        total += len(s)
    return sents


def dump(sents, path):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for i, s in enumerate(sents):
            if i:
                f.write("\n")
            for form, tag in s:
                f.write(f"{form}\t{tag}\n")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=OUT)
    args = ap.parse_args()
    news = generate(1997, 20000, NOUNS_NEWS, 0.18, 0.14)
    admin = generate(2024, 6000, NOUNS_ADMIN, 0.3, 0.06)
    dump(news, args.out / "fr_synth.vrt")
    dump(admin, args.out / "admin_synth.vrt")
    for name, s in (("fr_synth", news), ("admin_synth", admin)):
        print(name, len(s), "sentences", sum(map(len, s)), "tokens")


if __name__ == "__main__":
    main()
