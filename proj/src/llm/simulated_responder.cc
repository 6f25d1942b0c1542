// Copyright 2026 The privsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "privsynth/llm/simulated_responder.h"

#include <algorithm>
#include <cctype>
#include <array>
#include <map>
#include <set>
#include <string_view>
#include <vector>

#include "fmt/format.h"
#include "nlohmann/json.hpp"
#include "privsynth/core/random.h"
#include "privsynth/core/status.h"
#include "privsynth/core/text.h"
#include "privsynth/llm/prompts.h"

namespace privsynth::llm {
namespace {

using Json = nlohmann::json;

constexpr std::array<std::string_view, 24> kLastNames = {
    "Kowalski", "Okafor",   "Lindqvist", "Moreau",  "Tanaka",   "Haddad",
    "Brennan",  "Castillo", "Novak",     "Achebe",  "Whitfield", "Petrov",
    "Nakamura", "Delgado",  "Fitzroy",   "Mbeki",   "Sorensen", "Valdez",
    "Iyer",     "Halloran", "Quinlan",   "Abernathy", "Rossi",  "Yilmaz"};

constexpr std::array<std::string_view, 12> kCitizenships = {
    "United States", "Canada",  "Ireland", "Nigeria", "Brazil", "India",
    "Poland",        "Japan",   "Mexico",  "Sweden",  "Kenya",  "Australia"};

constexpr std::array<std::string_view, 5> kIdTypes = {
    "Driver's License", "State ID Card", "Social Security Card",
    "Residence Permit", "National ID Card"};

constexpr std::array<std::string_view, 16> kPlaces = {
    "Harbor Point Clinic",     "Mercy Regional Hospital",
    "Alder Street Pharmacy",   "Northgate Credit Union",
    "Lakeview Community Center", "Redwood County Courthouse",
    "Saint Brigid Parish Hall", "Westfield Public Library",
    "Cedar Ridge High School", "Maple Grove Dental Office",
    "Summit Logistics Depot",  "Bayside Veterinary Hospital",
    "Granite Falls City Hall", "Orchard Lane Apartments",
    "Pioneer Savings Bank",    "Hollow Creek Fitness Club"};

constexpr std::array<std::string_view, 14> kStreets = {
    "Alder Street",  "Birch Avenue",  "Cobalt Road",   "Dunmore Lane",
    "Elm Terrace",   "Foxglove Way",  "Garnet Drive",  "Heron Court",
    "Juniper Place", "Kestrel Row",   "Larkspur Road", "Mulberry Street",
    "Nettle Avenue", "Oakhurst Boulevard"};

constexpr std::array<std::string_view, 12> kCities = {
    "Springfield", "Riverton",  "Ashland",   "Brookhaven", "Clearwater",
    "Dunmore",     "Fairhaven", "Glenwood",  "Hartford",   "Kingsport",
    "Lakewood",    "Milford"};

constexpr std::array<std::string_view, 16> kSources = {
    "Patient intake form from",   "Billing statement from",
    "Incident report filed with", "Membership application for",
    "Email thread with",          "Court filing at",
    "Loan application at",        "Counseling session notes from",
    "Employment verification letter from", "Insurance claim submitted to",
    "Volunteer roster kept by",   "Lease agreement with",
    "Prescription record from",   "Disciplinary memo from",
    "Reddit post describing a visit to", "Voicemail transcript from"};

constexpr std::array<std::string_view, 20> kSubjects = {
    "the attending nurse", "a billing clerk",   "the case officer",
    "her landlord",        "the branch manager", "a neighbor",
    "the intake counselor", "the claims adjuster", "his supervisor",
    "the pharmacist",      "a paralegal",       "the site coordinator",
    "the duty sergeant",   "an auditor",        "the school registrar",
    "a technician",        "the physician",     "the property manager",
    "a volunteer",         "the loan officer"};

constexpr std::array<std::string_view, 20> kVerbs = {
    "documented",  "confirmed",  "reviewed",   "flagged",    "noted",
    "recorded",    "verified",   "disputed",   "summarized", "escalated",
    "scheduled",   "rescheduled", "approved",  "questioned", "updated",
    "transcribed", "reconciled", "annotated",  "archived",   "forwarded"};

constexpr std::array<std::string_view, 24> kObjects = {
    "the outstanding balance",     "a follow-up appointment",
    "the revised payment plan",    "an allergy to penicillin",
    "the missing paperwork",       "a noise complaint",
    "the insurance pre-authorization", "a change of address",
    "the overdue invoice",         "the physical therapy referral",
    "a request for records",       "the security deposit",
    "a prescription refill",       "the witness statement",
    "the parking violation",       "a scholarship application",
    "the background check",        "an emergency contact update",
    "the signed consent form",     "a transfer request",
    "the repair estimate",         "the blood pressure reading",
    "a grievance letter",          "the enrollment deadline"};

constexpr std::array<std::string_view, 16> kModifiers = {
    "after a lengthy phone call",     "during the morning shift",
    "without further explanation",    "at the client's request",
    "following a second review",      "in a handwritten note",
    "despite earlier objections",     "before the end of the quarter",
    "with visible frustration",       "as required by policy",
    "after comparing prior entries",  "while the family waited",
    "under the supervision of staff", "in the presence of a witness",
    "ahead of the scheduled hearing", "once the fees were settled"};

constexpr std::array<std::string_view, 10> kTones = {
    "clinical and terse",      "formal and procedural",
    "warm but guarded",        "anxious and hurried",
    "detached and bureaucratic", "apologetic",
    "matter-of-fact",          "frustrated but polite",
    "meticulous and dry",      "confessional"};

constexpr std::array<std::string_view, 10> kSections = {
    "a header block with identifiers",   "a chronological narrative",
    "a bulleted list of observations",   "a short summary paragraph",
    "a signature line",                  "a table-like list of line items",
    "numbered action items",             "a free-form comment section",
    "a question-and-answer transcript",  "an addendum with corrections"};

std::string_view Pick(Rng& rng, std::span<const std::string_view> pool) {
  return pool[UniformIndex(rng, pool.size())];
}

template <size_t N>
std::string_view Pick(Rng& rng, const std::array<std::string_view, N>& pool) {
  return Pick(rng, std::span<const std::string_view>(pool));
}

std::string Digits(Rng& rng, int n) {
  std::string out;
  for (int i = 0; i < n; ++i) {
    out.push_back(static_cast<char>('0' + UniformIndex(rng, 10)));
  }
  if (out[0] == '0') out[0] = '7';
  return out;
}

std::string RandomDate(Rng& rng, int year_lo, int year_hi) {
  const int year =
      year_lo + static_cast<int>(UniformIndex(rng, year_hi - year_lo + 1));
  const int month = 1 + static_cast<int>(UniformIndex(rng, 12));
  int day = 1 + static_cast<int>(UniformIndex(rng, 28));
  if (day == 15) day = 16;
  return fmt::format("{:04d}-{:02d}-{:02d}", year, month, day);
}

Rng RngFor(const GenerationRequest& request) {
  uint64_t seed = Fnv1a64(request.prompt);
  seed = SplitMix64(seed ^ request.seed.value_or(0x5eedULL));
  return Rng(seed);
}

std::string Var(const GenerationRequest& request, const std::string& key) {
  auto it = request.vars.find(key);
  return it == request.vars.end() ? std::string() : it->second;
}

// "Key: Value" pairs from lines such as "- Phone Number: 555".
std::vector<std::pair<std::string, std::string>> KeyValueLines(
    std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::string_view line : Split(text, "\n")) {
    line = StripWhitespace(line);
    ConsumePrefix(&line, "- ");
    const size_t colon = line.find(": ");
    if (colon == std::string_view::npos || colon == 0 || colon > 40) continue;
    std::string_view key = StripWhitespace(line.substr(0, colon));
    std::string_view value =
        StripWhitespace(line.substr(colon + 2));
    ConsumeSuffix(&value, ".");
    if (value.empty()) continue;
    bool key_ok = std::isupper(static_cast<unsigned char>(key[0]));
    for (char c : key) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != ' ' &&
          c != '\'') {
        key_ok = false;
      }
    }
    if (key_ok) out.emplace_back(std::string(key), std::string(value));
  }
  return out;
}

std::string Lookup(const std::vector<std::pair<std::string, std::string>>& kv,
                   std::string_view key, std::string_view fallback = "") {
  for (const auto& [k, v] : kv) {
    if (EqualsIgnoreCase(k, key)) return v;
  }
  return std::string(fallback);
}

std::vector<std::string> SplitOptions(std::string_view text) {
  std::vector<std::string> out;
  for (std::string_view item : SplitAny(text, ",\n")) {
    item = StripWhitespace(item);
    ConsumePrefix(&item, "- ");
    if (!item.empty()) out.emplace_back(item);
  }
  return out;
}

std::string OrderedList(const std::vector<std::string>& items) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    StrAppend(&out, i + 1, ". ", items[i], "\n");
  }
  return out;
}

std::string Sentence(Rng& rng, std::string_view name) {
  std::string subject(Pick(rng, kSubjects));
  subject[0] = std::toupper(static_cast<unsigned char>(subject[0]));
  return StrCat(subject, " ", Pick(rng, kVerbs), " ",
                      Pick(rng, kObjects), " for ", name, " ",
                      Pick(rng, kModifiers), ".");
}

absl::StatusOr<std::string> SimulateProfile(const GenerationRequest& request) {
  Rng rng = RngFor(request);
  const auto demographics = KeyValueLines(Var(request, "demographics"));
  const std::string first = Lookup(demographics, "First Name", "Alex");
  std::vector<std::string> sexes = SplitOptions(Var(request, "sex_options"));
  std::vector<std::string> ethnicities =
      SplitOptions(Var(request, "ethnicity_options"));
  std::vector<std::string> events = SplitOptions(Var(request, "life_events"));
  if (sexes.empty()) sexes = {"Female", "Male"};
  if (ethnicities.empty()) ethnicities = {"Unspecified"};
  if (events.empty()) events = {"relocation"};
  const std::string last(Pick(rng, kLastNames));
  const std::string lower_first = ToLowerAscii(first);
  const std::string lower_last = ToLowerAscii(last);
  const std::string suffix = Digits(rng, 2);

  std::string out;
  for (const auto& [key, value] : demographics) {
    StrAppend(&out, "- ", key, ": ", value, "\n");
  }
  StrAppend(&out, "- Last Name: ", last, "\n");
  StrAppend(&out, "- Sex: ", sexes[UniformIndex(rng, sexes.size())],
                  "\n");
  StrAppend(&out, "- Ethnicity: ",
                  ethnicities[UniformIndex(rng, ethnicities.size())], "\n");
  StrAppend(&out, "- Citizenship: ", Pick(rng, kCitizenships), "\n\n");
  StrAppend(&out, "- ID type: ", Pick(rng, kIdTypes), "\n");
  StrAppend(&out, "- ID Number: ", static_cast<char>('A' + UniformIndex(rng, 26)),
                  Digits(rng, 4), "-", Digits(rng, 4), "-", Digits(rng, 3),
                  "\n");
  StrAppend(&out, "- Passport Number: ",
                  static_cast<char>('A' + UniformIndex(rng, 26)),
                  Digits(rng, 8), "\n\n");
  StrAppend(&out, "- Phone Number: (", Digits(rng, 3), ") ",
                  Digits(rng, 3), "-", Digits(rng, 4), "\n");
  StrAppend(&out, "- Email: ", lower_first, ".", lower_last, suffix,
                  "@mailbox.example\n");
  StrAppend(&out, "- User Handle: @", lower_first, "_", lower_last[0],
                  suffix, "\n");
  StrAppend(&out, "- URL: https://", lower_first, lower_last,
                  ".example.org\n\n");
  StrAppend(&out, "- Attributes:\n");
  StrAppend(&out, "  - Event: ", events[UniformIndex(rng, events.size())],
                  "\n");
  StrAppend(&out, "  - Event Date: ", RandomDate(rng, 2015, 2024), "\n");
  StrAppend(&out, "  - Event Location: ", Pick(rng, kPlaces), ", ",
                  Pick(rng, kCities), "\n");
  return out;
}

absl::StatusOr<std::string> SimulateRecordTypes(
    const GenerationRequest& request) {
  Rng rng = RngFor(request);
  const size_t n = 5 + UniformIndex(rng, 3);
  std::vector<std::string> items;
  std::set<std::string> seen;
  while (items.size() < n) {
    std::string item =
        StrCat(Pick(rng, kSources), " ", Pick(rng, kPlaces));
    if (seen.insert(item).second) items.push_back(std::move(item));
  }
  return OrderedList(items);
}

absl::StatusOr<std::string> SimulateContexts(const GenerationRequest& request) {
  Rng rng = RngFor(request);
  const std::string name = Var(request, "first_name");
  const std::string attribute = Var(request, "attribute");
  std::vector<std::string> items;
  for (int i = 0; i < 5; ++i) {
    items.push_back(StrCat(
        name, " is dealing with ", attribute.empty() ? "a private matter" : attribute,
        " when ", Pick(rng, kSubjects), " ", Pick(rng, kVerbs), " ",
        Pick(rng, kObjects), " ", Pick(rng, kModifiers), " in ",
        Pick(rng, kCities)));
  }
  return OrderedList(items);
}

absl::StatusOr<std::string> SimulateFormats(const GenerationRequest& request) {
  Rng rng = RngFor(request);
  std::vector<std::string> items;
  for (int i = 0; i < 10; ++i) {
    items.push_back(StrCat("Opens with ", Pick(rng, kSections),
                                 ", then ", Pick(rng, kSections),
                                 ", closing with ", Pick(rng, kSections),
                                 "; tone is ", Pick(rng, kTones)));
  }
  return OrderedList(items);
}

absl::StatusOr<std::string> SimulateDraft(const GenerationRequest& request) {
  Rng rng = RngFor(request);
  const auto profile = KeyValueLines(Var(request, "profile"));
  const std::string first = Lookup(profile, "First Name", "the client");
  const std::string last = Lookup(profile, "Last Name");
  const std::string full = last.empty() ? first : StrCat(first, " ", last);
  std::string out = StrCat(Var(request, "record_type"), "\n\n");

  // A small share of drafts come out too short, so the length filter has
  // something to remove.
  const bool stub = UniformIndex(rng, 25) == 0;
  StrAppend(&out, "Name: ", full, "\n");
  for (std::string_view key :
       {"Phone Number", "Email", "ID Number", "Date of Birth"}) {
    const std::string value = Lookup(profile, key);
    if (!value.empty() && UniformIndex(rng, 4) != 0) {
      StrAppend(&out, key, ": ", value, "\n");
    }
  }
  StrAppend(&out, "\n");
  if (stub) {
    StrAppend(&out, Sentence(rng, first), "\n");
    return out;
  }
  const size_t paragraphs = 2 + UniformIndex(rng, 3);
  for (size_t p = 0; p < paragraphs; ++p) {
    const size_t sentences = 2 + UniformIndex(rng, 4);
    for (size_t s = 0; s < sentences; ++s) {
      if (s > 0) out += " ";
      out += Sentence(rng, UniformIndex(rng, 3) == 0 ? full : first);
    }
    StrAppend(&out, "\n\n");
    if (p == 0) {
      const std::string event = Lookup(profile, "Event");
      if (!event.empty()) {
        StrAppend(&out, "The matter concerns a ", event, " on ",
                        Lookup(profile, "Event Date", "an earlier date"),
                        " at ", Lookup(profile, "Event Location", "the office"),
                        ".\n\n");
      }
      StrAppend(&out, "Reference Number: ", Digits(rng, 4), "-",
                      Digits(rng, 4), "\n");
      StrAppend(&out, "Facility: ", Pick(rng, kPlaces), "\n");
      StrAppend(&out, "Street Address: ", 10 + UniformIndex(rng, 890),
                      " ", Pick(rng, kStreets), ", ", Pick(rng, kCities), "\n");
      StrAppend(&out, "Visit Date: ", RandomDate(rng, 2018, 2025), "\n");
      StrAppend(&out, "Amount Due: $", 20 + UniformIndex(rng, 4980), ".",
                      Digits(rng, 2), "\n\n");
    }
  }
  StrAppend(&out, "Prepared by ", Pick(rng, kSubjects), " on ",
                  RandomDate(rng, 2019, 2025), ".");
  return out;
}

absl::StatusOr<std::string> SimulateJudge(const GenerationRequest& request) {
  Rng rng = RngFor(request);
  const size_t draw = UniformIndex(rng, 20);
  if (draw < 9) return std::string("A");
  if (draw < 16) return std::string("B");
  return std::string("TIE");
}

const std::set<std::string>& ProfileKeys() {
  static const auto* keys = new std::set<std::string>{
      "name",        "first_name",  "last_name",       "sex",
      "ethnicity",   "citizenship", "date_of_birth",   "age",
      "id_type",     "id_number",   "passport_number", "phone_number",
      "email",       "user_handle", "url"};
  return *keys;
}

absl::StatusOr<std::string> SimulateAnnotate(const GenerationRequest& request) {
  Json out = Json::object();
  for (const auto& [key, value] : KeyValueLines(Var(request, "record"))) {
    const std::string snake = SnakeCase(key);
    if (snake.empty() || ProfileKeys().contains(snake)) continue;
    out[snake] = value;
  }
  return out.dump();
}

std::string GroupFor(std::string_view key) {
  static constexpr std::array<std::pair<std::string_view, std::string_view>, 14>
      kRules = {{{"name", "identity"},
                 {"sex", "identity"},
                 {"ethnicity", "identity"},
                 {"citizenship", "identity"},
                 {"phone", "contact"},
                 {"email", "contact"},
                 {"handle", "contact"},
                 {"url", "contact"},
                 {"number", "identifiers"},
                 {"id_type", "identifiers"},
                 {"date", "dates"},
                 {"address", "location"},
                 {"facility", "location"},
                 {"location", "location"}}};
  for (const auto& [needle, label] : kRules) {
    if (Contains(key, needle)) return std::string(label);
  }
  return "details";
}

absl::StatusOr<std::string> SimulateGroup(const GenerationRequest& request) {
  Json attributes = Json::parse(Var(request, "attributes"), nullptr, false);
  if (attributes.is_discarded() || !attributes.is_object()) {
    return std::string("{}");
  }
  std::map<std::string, std::vector<std::string>> groups;
  for (const auto& [key, value] : attributes.items()) {
    groups[GroupFor(key)].push_back(key);
  }
  Json out = Json::object();
  for (auto& [label, keys] : groups) {
    if (keys.size() >= 2) out[label] = keys;
  }
  return out.dump();
}

absl::StatusOr<std::string> SimulateCategory(const GenerationRequest& request) {
  const std::string record = ToLowerAscii(Var(request, "record"));
  static constexpr std::array<std::pair<std::string_view, std::string_view>, 12>
      kRules = {{{"patient", "Medical Care"},
                 {"prescription", "Medical Care"},
                 {"clinic", "Medical Care"},
                 {"counseling", "Mental Health"},
                 {"billing", "Financial Records"},
                 {"loan", "Financial Records"},
                 {"insurance", "Financial Records"},
                 {"court", "Legal Documents"},
                 {"incident", "Legal Documents"},
                 {"lease", "Housing"},
                 {"employment", "Employment Documents"},
                 {"membership", "Community & Social"}}};
  std::string label = "Personal Correspondence";
  const std::string first_line(
      record.substr(0, std::min(record.find('\n'), record.size())));
  for (const auto& [needle, candidate] : kRules) {
    if (Contains(first_line, needle)) {
      label = std::string(candidate);
      break;
    }
  }
  for (const std::string& existing : SplitOptions(Var(request, "categories"))) {
    if (EqualsIgnoreCase(existing, label)) return existing;
  }
  return label;
}

absl::StatusOr<std::string> SimulateSensitivity(
    const GenerationRequest& request) {
  Json attributes = Json::parse(Var(request, "attributes"), nullptr, false);
  Json out = Json::object();
  if (attributes.is_discarded() || !attributes.is_object()) return out.dump();
  for (const auto& [key, value] : attributes.items()) {
    double weight = 0.2 + 0.4 * static_cast<double>(Fnv1a64(key) % 100) / 100.0;
    if (Contains(key, "number") || Contains(key, "passport") ||
        Contains(key, "phone") || Contains(key, "email")) {
      weight = 0.9;
    } else if (Contains(key, "name") ||
               Contains(key, "address")) {
      weight = 0.8;
    } else if (Contains(key, "date")) {
      weight = 0.7;
    }
    out[key] = weight;
  }
  return out.dump();
}

std::vector<std::string> TargetValues(const GenerationRequest& request) {
  Json values = Json::parse(Var(request, "target_values"), nullptr, false);
  std::vector<std::string> out;
  if (values.is_array()) {
    for (const Json& v : values) {
      if (v.is_string() && !v.get<std::string>().empty()) {
        out.push_back(v.get<std::string>());
      }
    }
  }
  if (out.empty() && !Var(request, "target_value").empty()) {
    out.push_back(Var(request, "target_value"));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() > b.size();
  });
  return out;
}

absl::StatusOr<std::string> SimulateRelevantChunks(
    const GenerationRequest& request) {
  // Flags chunks that mention the longest word of any value, which catches
  // partial mentions the verbatim pre-pass misses.
  std::vector<std::string> words;
  for (const std::string& value : TargetValues(request)) {
    std::vector<std::string> tokens = LexicalTokens(value);
    auto longest = std::max_element(
        tokens.begin(), tokens.end(),
        [](const auto& a, const auto& b) { return a.size() < b.size(); });
    if (longest != tokens.end() && longest->size() >= 5) {
      words.push_back(*longest);
    }
  }
  Json chunks = Json::parse(Var(request, "chunk_texts"), nullptr, false);
  Json out = Json::array();
  if (!chunks.is_array()) return out.dump();
  for (size_t index = 0; index < chunks.size(); ++index) {
    const std::string lower = ToLowerAscii(chunks[index].get<std::string>());
    for (const std::string& word : words) {
      if (Contains(lower, word)) {
        out.push_back(index);
        break;
      }
    }
  }
  return out.dump();
}

absl::StatusOr<std::string> SimulateExtractSpans(
    const GenerationRequest& request) {
  const std::string chunk = ToLowerAscii(Var(request, "chunk"));
  Json out = Json::array();
  for (const std::string& value : TargetValues(request)) {
    const std::string lower = ToLowerAscii(value);
    for (size_t pos : FindAll(chunk, lower)) {
      out.push_back({pos, pos + lower.size()});
    }
  }
  return out.dump();
}

absl::StatusOr<std::string> SimulateAbstractInstruction(
    const GenerationRequest& request) {
  const std::string key = KeyDisplayName(Var(request, "target_key"));
  return StrCat("Abstract the specific ", key, " as 'an undisclosed ",
                      key, "'");
}

absl::StatusOr<std::string> SimulateApply(const GenerationRequest& request) {
  std::string chunk = Var(request, "chunk");
  const bool drop = Var(request, "label") == "DROP";
  const std::string key = KeyDisplayName(Var(request, "target_key"));
  const std::string replacement =
      drop ? std::string() : StrCat("an undisclosed ", key);
  for (const std::string& value : TargetValues(request)) {
    chunk = ReplaceAll(chunk, value, replacement);
  }
  if (drop) {
    while (Contains(chunk, "  ")) {
      chunk = ReplaceAll(chunk, "  ", " ");
    }
  }
  if (StripWhitespace(chunk).empty()) chunk = "[removed]";
  return chunk;
}

absl::StatusOr<std::string> SimulateFinalInstruction(
    const GenerationRequest& request) {
  Json steps = Json::parse(Var(request, "instruction_list"), nullptr, false);
  Json keep = Json::parse(Var(request, "retention_keys"), nullptr, false);
  std::vector<std::string> parts;
  if (steps.is_array()) {
    for (const Json& step : steps) {
      std::string s = step.get<std::string>();
      if (!s.empty()) s[0] = std::tolower(static_cast<unsigned char>(s[0]));
      parts.push_back(std::move(s));
    }
  }
  std::string out = StrCat("Please ", Join(parts, "; "));
  if (keep.is_array() && !keep.empty()) {
    std::vector<std::string> keys;
    for (const Json& k : keep) keys.push_back(KeyDisplayName(k.get<std::string>()));
    StrAppend(&out, ", while keeping the ", Join(keys, " and the "),
                    " unchanged");
  }
  StrAppend(&out, ".");
  return out;
}

absl::StatusOr<std::string> SimulateInfer(const GenerationRequest& request) {
  const std::string attribute = Var(request, "attribute");
  for (const auto& [key, value] : KeyValueLines(Var(request, "text"))) {
    if (EqualsIgnoreCase(key, attribute)) return value;
  }
  return std::string("Unknown");
}

// Normalized longest-common-subsequence length; 1 for identical strings.
double Similarity(std::string_view a, std::string_view b) {
  if (a.empty() && b.empty()) return 1.0;
  std::vector<size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (size_t i = 1; i <= a.size(); ++i) {
    for (size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return 2.0 * static_cast<double>(prev[b.size()]) /
         static_cast<double>(a.size() + b.size());
}

absl::StatusOr<std::string> SimulateProximity(
    const GenerationRequest& request) {
  const std::string truth = ToLowerAscii(Var(request, "true_value"));
  const double a = Similarity(ToLowerAscii(Var(request, "prediction_a")), truth);
  const double b = Similarity(ToLowerAscii(Var(request, "prediction_b")), truth);
  if (a > b) return std::string("A");
  if (b > a) return std::string("B");
  return std::string("TIE");
}

absl::StatusOr<std::string> SimulatePresence(const GenerationRequest& request) {
  const std::string text = ToLowerAscii(Var(request, "text"));
  const std::string value = ToLowerAscii(Var(request, "value"));
  return std::string(!value.empty() && Contains(text, value) ? "YES"
                                                                       : "NO");
}

}  // namespace

absl::StatusOr<std::string> SimulateResponse(const GenerationRequest& request) {
  const std::string_view task = request.task;
  if (task == tasks::kProfile) return SimulateProfile(request);
  if (task == tasks::kRecordType) return SimulateRecordTypes(request);
  if (task == tasks::kBackgroundContext) return SimulateContexts(request);
  if (task == tasks::kRecordFormat) return SimulateFormats(request);
  if (task == tasks::kDraft) return SimulateDraft(request);
  if (task == tasks::kJudge) return SimulateJudge(request);
  if (task == tasks::kAnnotate) return SimulateAnnotate(request);
  if (task == tasks::kGroup) return SimulateGroup(request);
  if (task == tasks::kCategory) return SimulateCategory(request);
  if (task == tasks::kSensitivity) return SimulateSensitivity(request);
  if (task == tasks::kRelevantChunks) return SimulateRelevantChunks(request);
  if (task == tasks::kExtractSpans) return SimulateExtractSpans(request);
  if (task == tasks::kAbstractInstruction) {
    return SimulateAbstractInstruction(request);
  }
  if (task == tasks::kApplyInstruction) return SimulateApply(request);
  if (task == tasks::kFinalInstruction) return SimulateFinalInstruction(request);
  if (task == tasks::kInferAttribute) return SimulateInfer(request);
  if (task == tasks::kProximityJudge) return SimulateProximity(request);
  if (task == tasks::kRetentionPresence) return SimulatePresence(request);
  return MakeError(ErrorCode::kProviderError,
                   StrCat("simulated responder has no behavior for task '",
                                task, "'"));
}

}  // namespace privsynth::llm
