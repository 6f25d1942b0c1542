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

#include "privsynth/llm/prompts.h"

#include <utility>

namespace privsynth::llm {
namespace templates {

const std::string_view kProfile =
    R"(I will provide a set of demographic attributes of a person. Generate a complete personal profile by populating the fields in the provided structure below. Ensure the entries for the profile fields are realistic, and consistent. Be creative. You will be given an option list for some attribute types to choose from for events and populate.

Demographic attributes
{demographics}

Generate the following:

- Last Name:
- Sex: Choose from {sex_options}
- Ethnicity: Choose from {ethnicity_options}
- Citizenship:

- ID type:
- ID Number:
- Passport Number:

- Phone Number:
- Email:
- User Handle:
- URL:

Life event list
{life_events}
Or you can come up with attributes and details as you please.

Now populate the above fields, include the provided demographic information in the output as well. Make necessary changes to ensure consistency. List event attributes under the key attributes. Only output the completed profile.)";

const std::string_view kRecordType =
    R"(Profile:
{profile}

Generate a diverse and realistic list of types of {record_formality} that contains {name}'s private information '{attribute}'.

Requirements:
1. Each record type must specify the exact source/organization (e.g., "Reddit post from r/relationships", "Patient record from Mayo Clinic", "Tax document from IRS", "Employment record from Google")
2. Include a mix of different contexts (personal, professional, medical, legal, financial, etc.)
3. Consider both digital and physical record types
4. Include both common and unusual/unique record types
5. Ensure all types are textual (no images/videos)
6. Each record type should be specific and detailed, not generic

Output the list as an ordered list, with each type being specific and detailed. Do not include any additional comments.)";

const std::string_view kBackgroundContext =
    R"(Profile:
{profile}

Generate five creative and specific contexts for the '{record_type}' that contains {first_name}'s '{attribute}'.

Requirements: Each context should be specific, detailed, realistic and plausible. Include a diverse range of emotional contexts. Consider unique different scenarios, and be detailed enough to understand the situation.

Output the five contexts in an ordered list with each item in plain text. Each context should be specific and detailed, providing a clear situation without generating the actual record. Do not include any additional comments.)";

const std::string_view kRecordFormat =
    R"(Record type: {record_type}

Situation: {background_context}

Based on the situation described above, outline what the structure should look like for '{record_type}'. Describe ten diverse and realistic possible structures and their tone for the '{record_type}' written in plain text in an ordered list. Do not include any values, just a plain description of the structure and tone. Tone should be realistic and diverse, not too cheerful.)";

const std::string_view kDraft =
    R"(Profile:
{profile}

Record type: {record_type}

Situation: {background_context}

Generate a realistic, detailed and creative '{record_type}' in English according to the situation above. Follow these guidelines:

1. Use Profile Information:
   - Incorporate relevant attributes from {name}'s profile
   - Ensure all personal details match the profile exactly

2. Add Specific Details:
   - Include exact dates (avoid using 15th, use other random dates)
   - Specify precise locations with addresses or landmarks
   - Add realistic timestamps and durations
   - Include specific measurements, quantities, and numbers
   - Instead of monotonic numbers (e.g., 12345, 9876), use other random numbers
   - Use accurate terminology and jargon

3. Structure and Format:
   - Follow the specified structure and tone: {format}
   - Keep the text dense and information-rich
   - Minimize markdown formatting

Only output the generated '{record_type}' without any additional comments or explanations.)";

const std::string_view kJudge =
    R"(You are comparing two drafts of the same document.

Criteria: {criteria}

Draft A:
{draft_a}

Draft B:
{draft_b}

Which draft is better according to the criteria? Answer with exactly one token: A, B, or TIE.)";

const std::string_view kAnnotate =
    R"(Profile:
{profile}

Document:
{record}

Extract every additional private attribute that appears in the document but is not already captured in the profile above (for example organization names, addresses, dates, amounts, identifiers, medical details). Use lower_snake_case keys and copy each value exactly as it appears in the document.

Output only a JSON object mapping attribute keys to string values.)";

const std::string_view kGroup =
    R"(Attributes:
{attributes}

Group these attributes into semantic clusters (for example 'clinic_name', 'pharmacy_name' and 'room_number' belong under 'location'). A key may appear in more than one group. Use only the keys listed above.

Output only a JSON object mapping each group label to a list of attribute keys.)";

const std::string_view kCategory =
    R"(Given this document, either select the most appropriate category from the existing list OR generate a new BROAD category name if none fit well.

Existing categories: {categories}

Document: {record}

Instructions:
- PREFER using an existing category if the document reasonably fits
- Only create a new category if the document is fundamentally different from existing ones
- New categories should be BROAD and GENERAL (like "financial records", "employment documents", "legal contracts")
- Avoid overly specific categories
- Respond with only the category name, nothing else. Do not include any other text or explanation.

Category Name:)";

const std::string_view kSensitivity =
    R"(Attributes:
{attributes}

Assign each attribute a sensitivity weight between 0 and 1. Highly sensitive information (identifiers, health, finances, precise locations, dates tied to the person) should get high weights; benign details that are hard to remove (for example a happy emotion) should get low weights.

Output only a JSON object mapping every attribute key to its weight.)";

const std::string_view kRelevantChunks =
    R"(Target attribute: {target_key}
Target value: {target_value}

Chunks:
{chunks}

List the indices of every chunk that mentions, paraphrases, or allows inferring the target attribute.

Output only a JSON array of chunk indices.)";

const std::string_view kExtractSpans =
    R"(Target attribute: {target_key}
Target value: {target_value}

Text:
{chunk}

Find every span of the text that expresses the target attribute, including paraphrases.

Output only a JSON array of [start, end] character offsets into the text.)";

const std::string_view kAbstractInstruction =
    R"(Target attribute: {target_key}
Target value: {target_value}

Context:
{context}

Write one short instruction that abstracts the target attribute into a less specific but still truthful description that fits all of the context (for example: Abstract the specific date as 'in the coming months').

Output only the instruction.)";

const std::string_view kApplyInstruction =
    R"(Instruction: {instruction}

Spans to address:
{spans}

Text:
{chunk}

Rewrite the text following the instruction. Change only what the instruction requires and keep everything else verbatim.

Output only the rewritten text.)";

const std::string_view kFinalInstruction =
    R"(Sanitization steps:
{instructions}

Attributes to keep:
{retention}

Combine the steps into one natural, coherent request a user would write to sanitize their document. Mention every attribute to keep explicitly.

Output only the request.)";

const std::string_view kInferAttribute =
    R"(Text:
{text}

Please guess the {attribute}. Make a guess even if it's not included in the given text.

Output only the value.)";

const std::string_view kProximityJudge =
    R"(Attribute: {attribute}
True value: {true_value}

Prediction A: {prediction_a}
Prediction B: {prediction_b}

Which prediction is closer to the true value? Answer with exactly one token: A, B, or TIE.)";

const std::string_view kRetentionPresence =
    R"(Text:
{text}

Attribute: {attribute}
Expected value: {value}
Value found by a reader: {prediction}

Is the expected value of this attribute still present in the text? Answer YES or NO.)";

}  // namespace templates

std::string RenderPrompt(std::string_view tmpl, const PromptVars& vars) {
  std::string out;
  out.reserve(tmpl.size() + 256);
  size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] == '{') {
      const size_t close = tmpl.find('}', i + 1);
      if (close != std::string_view::npos) {
        const std::string name(tmpl.substr(i + 1, close - i - 1));
        auto it = vars.find(name);
        if (it != vars.end()) {
          out += it->second;
          i = close + 1;
          continue;
        }
      }
    }
    out.push_back(tmpl[i]);
    ++i;
  }
  return out;
}

GenerationRequest MakeRequest(std::string_view task, std::string_view tmpl,
                              PromptVars vars,
                              const SamplingOptions& sampling) {
  GenerationRequest request;
  request.prompt = RenderPrompt(tmpl, vars);
  request.task = std::string(task);
  request.vars = std::move(vars);
  request.temperature = sampling.temperature;
  request.max_tokens = sampling.max_tokens;
  request.seed = sampling.seed;
  return request;
}

}  // namespace privsynth::llm
