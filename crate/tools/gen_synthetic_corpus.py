#!/usr/bin/env python3
# One-off generator for data/fixtures/synthetic50.jsonl and its gold file.
# The pair plan is the hand-designed source of truth; spans are located by
# plain string search over the article text, independent of the extractor.
import json
import os

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

IMFund = "International Monetary Fund"
IMFunds = "International Monetary Funds"
UNOrg = "United Nations Organisation"
ECBank = "European Central Bank"
CARep = "Central African Republic"
CARatio = "Capital Adequacy Ratio"
WHOrg = "World Health Organization"
NATOrg = "North Atlantic Treaty Organisation"
EZBa = "Europäische Zentralbank"
EZBi = "Europäischen Zentralbank"
SPDsoz = "Sozialdemokratische Partei Deutschlands"
CDUlf = "Christlich Demokratische Union"
BCElf = "Banque centrale européenne"
ONUl = "l'Organisation des Nations unies"
ONUu = "l'Organisation des Nations Unies"
PSlf = "Parti socialiste"

# (id, language, text, [(sf, lf), ...] in text order)
ARTICLES = [
    ("a01", "en", "The International Monetary Fund (IMF) lent money to members. Critics said the International Monetary Fund (IMF) moved slowly.",
     [("IMF", IMFund), ("IMF", IMFund)]),
    ("a02", "en", "The International Monetary Fund (IMF) lent money. The European Central Bank (ECB) agreed to help.",
     [("IMF", IMFund), ("ECB", ECBank)]),
    ("a03", "en", "The International Monetary Fund (IMF) published a report. The World Health Organization (WHO) issued guidance.",
     [("IMF", IMFund), ("WHO", WHOrg)]),
    ("a04", "en", "Officials at the International Monetary Fund (IMF) met on Tuesday.",
     [("IMF", IMFund)]),
    ("a05", "en", "The International Monetary Fund (IMF) sent a mission. Rebels in the Central African Republic (CAR) advanced.",
     [("IMF", IMFund), ("CAR", CARep)]),
    ("a06", "en", "The International Monetary Fund (IMF) approved loans. The United Nations Organisation (UNO) met in Geneva.",
     [("IMF", IMFund), ("UNO", UNOrg)]),
    ("a07", "en", "Growth forecasts from the International Monetary Fund (IMF) fell.",
     [("IMF", IMFund)]),
    ("a08", "en", "The International Monetary Fund (IMF) warned of risks. The World Health Organization (WHO) tracked the outbreak.",
     [("IMF", IMFund), ("WHO", WHOrg)]),
    ("a09", "en", "The International Monetary Fund (IMF) raised quotas. The United Nations Organisation (UNO) passed a resolution.",
     [("IMF", IMFund), ("UNO", UNOrg)]),
    ("a10", "en", "The International Monetary Fund (IMF) backed the plan. The European Central Bank (ECB) cut rates.",
     [("IMF", IMFund), ("ECB", ECBank)]),
    ("a11", "en", "A spokesman for the International Monetary Fund (IMF) declined to comment.",
     [("IMF", IMFund)]),
    ("a12", "en", "The board reviewed International Monetary Funds (IMF) allocations. The World Health Organization (WHO) published data.",
     [("IMF", IMFunds), ("WHO", WHOrg)]),
    ("a13", "en", "The United Nations Organisation (UNO) condemned the attack. Later the United Nations Organisation (Uno) repeated the call.",
     [("UNO", UNOrg), ("Uno", UNOrg)]),
    ("a14", "en", "The European Central Bank (ECB) held steady. Lenders cited the Capital Adequacy Ratio (CAR) rules. The World Health Organization (WHO) sent teams.",
     [("ECB", ECBank), ("CAR", CARatio), ("WHO", WHOrg)]),
    ("a15", "en", "The European Central Bank (ECB) intervened. Aid reached the Central African Republic (CAR) by road. The World Health Organization (WHO) warned of cholera.",
     [("ECB", ECBank), ("CAR", CARep), ("WHO", WHOrg)]),
    ("a16", "en", "Ministers of the North Atlantic Treaty Organisation (NATO) gathered.",
     [("NATO", NATOrg)]),
    ("a17", "en", "Markets rallied on Friday (again) as volumes rose.", []),
    ("a18", "en", "Nobody oversees railway transport here (North).", []),
    ("a19", "en", "The firm raised new capital (US$5m) in days.", []),
    ("a20", "en", "Shares fell sharply (x) despite the rally.", []),
    ("d01", "de", "Die Europäische Zentralbank (EZB) senkte die Zinsen. Später bekräftigte die Europäische Zentralbank (EZB) ihren Kurs.",
     [("EZB", EZBa), ("EZB", EZBa)]),
    ("d02", "de", "Die Europäische Zentralbank (EZB) reagierte. Die Sozialdemokratische Partei Deutschlands (SPD) begrüßte den Schritt.",
     [("EZB", EZBa), ("SPD", SPDsoz)]),
    ("d03", "de", "Die Europäische Zentralbank (EZB) warnte. Die Christlich Demokratische Union (CDU) widersprach.",
     [("EZB", EZBa), ("CDU", CDUlf)]),
    ("d04", "de", "Anleger beobachteten die Europäische Zentralbank (EZB) genau.",
     [("EZB", EZBa)]),
    ("d05", "de", "Die Europäische Zentralbank (EZB) kaufte Anleihen. Die Sozialdemokratische Partei Deutschlands (SPD) forderte Reformen.",
     [("EZB", EZBa), ("SPD", SPDsoz)]),
    ("d06", "de", "Der Rat der Europäischen Zentralbank (EZB) tagte. Die Sozialdemokratische Partei Deutschlands (SPD) stellte Fragen.",
     [("EZB", EZBi), ("SPD", SPDsoz)]),
    ("d07", "de", "Ein Sprecher der Europäischen Zentralbank (EZB) erklärte die Lage. Die Christlich Demokratische Union (CDU) äußerte Kritik.",
     [("EZB", EZBi), ("CDU", CDUlf)]),
    ("d08", "de", "Die Sozialdemokratische Partei Deutschlands (SPD) und die Christlich Demokratische Union (CDU) verhandelten.",
     [("SPD", SPDsoz), ("CDU", CDUlf)]),
    ("d09", "de", "Stephan Dorgerloh (SPD) sagte, die Länder müssten handeln.",
     [("SPD", "Stephan Dorgerloh")]),
    ("d10", "de", "Die Namibische Rundfunkanstalt (NBC) berichtete am Abend.",
     [("NBC", "Namibische Rundfunkanstalt")]),
    ("d11", "de", "Die Vereinigte Nationen (UNO) tagte.", []),
    ("d12", "de", "Der Winter war lang (sehr lang) und kalt.", []),
    ("d13", "de", "Die Preise stiegen erneut (Montag) deutlich.", []),
    ("d14", "de", "Der Bericht erschien gestern.", []),
    ("d15", "de", "Zahlen folgen morgen (siehe unten) im Detail.", []),
    ("f01", "fr", "La Banque centrale européenne (BCE) a baissé ses taux. Ensuite la Banque centrale européenne (BCE) a confirmé sa décision.",
     [("BCE", BCElf), ("BCE", BCElf)]),
    ("f02", "fr", "La Banque centrale européenne (BCE) est intervenue. La réforme de l'Organisation des Nations unies (ONU) avance lentement.",
     [("BCE", BCElf), ("ONU", ONUl)]),
    ("f03", "fr", "La Banque centrale européenne (BCE) a réagi. Le Parti socialiste (PS) a protesté.",
     [("BCE", BCElf), ("PS", PSlf)]),
    ("f04", "fr", "La Banque centrale européenne (BCE) a publié un rapport. Un envoyé de l'Organisation des Nations unies (ONU) est arrivé.",
     [("BCE", BCElf), ("ONU", ONUl)]),
    ("f05", "fr", "Le chef de l'Organisation des Nations unies (ONU) a parlé. Un rapport de l'Organisation des Nations Unies (ONU) suivra.",
     [("ONU", ONUl), ("ONU", ONUu)]),
    ("f06", "fr", "Une mission de l'Organisation des Nations unies (ONU) débute. Le Parti socialiste (PS) a salué la nouvelle.",
     [("ONU", ONUl), ("PS", PSlf)]),
    ("f07", "fr", "Le siège de l'Organisation des Nations Unies (ONU) ouvrira. Le Parti socialiste (PS) a voté pour.",
     [("ONU", ONUu), ("PS", PSlf)]),
    ("f08", "fr", "Le Collectif d'artistes de reggae (CAR) organise un festival.",
     [("CAR", "Collectif d'artistes de reggae")]),
    ("f09", "fr", "Les marchés attendaient (encore) des nouvelles.", []),
    ("f10", "fr", "Le temps restera sec demain.", []),
    ("f11", "fr", "Les prix montent (Lundi) selon les données.", []),
    ("f12", "fr", "La saison fut longue (très longue) cette année.", []),
    ("f13", "fr", "Le rapport complet paraîtra bientôt.", []),
    ("f14", "fr", "Une panne a retardé le trafic (x) ce matin.", []),
    ("f15", "fr", "Les électeurs attendaient un signe clair.", []),
]

SOURCES = {"en": ["reuters", "bbc", "guardian"], "de": ["dpa", "spiegel"], "fr": ["afp", "lemonde"]}
MONTH = {"en": 1, "de": 2, "fr": 3}
CATEGORIES = ["economy", "politics", "world", "health", "sport"]

def spans(text, sf, lf, start_from):
    unit = f"{lf} ({sf})"
    i = text.find(unit, start_from)
    assert i >= 0, (text, unit)
    lf_span = {"start": i, "end": i + len(lf)}
    sf_start = i + len(lf) + 2
    sf_span = {"start": sf_start, "end": sf_start + len(sf)}
    assert text[lf_span["start"]:lf_span["end"]] == lf
    assert text[sf_span["start"]:sf_span["end"]] == sf
    return sf_span, lf_span, i + len(unit)

corpus_lines = ["# Synthetic 50-article corpus: en/de/fr news-style fixtures."]
gold_lines = ["# Gold annotations for synthetic50.jsonl (spans are char offsets)."]
counters = {}
for art_id, lang, text, plan in ARTICLES:
    n = counters.get(lang, 0)
    counters[lang] = n + 1
    record = {
        "id": art_id,
        "language": lang,
        "date": f"2013-{MONTH[lang]:02d}-{n + 1:02d}",
        "source": SOURCES[lang][n % len(SOURCES[lang])],
        "category": CATEGORIES[n % len(CATEGORIES)],
        "text": text,
    }
    corpus_lines.append(json.dumps(record, ensure_ascii=False))

    pairs = []
    cursor_by_unit = {}
    for sf, lf in plan:
        unit = f"{lf} ({sf})"
        start_from = cursor_by_unit.get(unit, 0)
        sf_span, lf_span, nxt = spans(text, sf, lf, start_from)
        cursor_by_unit[unit] = nxt
        pairs.append({"sf": sf, "lf": lf, "sf_span": sf_span, "lf_span": lf_span})
    gold_lines.append(json.dumps(
        {"article_id": art_id, "language": lang, "pairs": pairs}, ensure_ascii=False))

open(os.path.join(ROOT, "data/fixtures/synthetic50.jsonl"), "w").write("\n".join(corpus_lines) + "\n")
open(os.path.join(ROOT, "data/fixtures/synthetic50.gold.jsonl"), "w").write("\n".join(gold_lines) + "\n")

# Sanity tallies for the hand-computed statistics.
from collections import Counter
per_lang_pairs = Counter()
per_lang_occ = Counter()
per_lang_as = Counter()
uniq = Counter()
for art_id, lang, text, plan in ARTICLES:
    if plan:
        per_lang_as[lang] += 1
    for sf, lf in plan:
        per_lang_occ[lang] += 1
        uniq[(lang, sf, lf)] += 1
for (lang, sf, lf), c in sorted(uniq.items()):
    print(f"{lang}\t{sf}\t{lf}\t{c}")
print("AS:", dict(per_lang_as), "PO:", dict(per_lang_occ))
print("PU per lang:", Counter(k[0] for k in uniq))
print("articles per lang:", counters)
