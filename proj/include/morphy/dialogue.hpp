#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "morphy/lexicon.hpp"
#include "morphy/paradigm.hpp"

namespace morphy {

class DialogueError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Alternative {
  std::string label;    // as shown: "du telefonierst"
  std::string surface;  // the word form it stands for ("" for choices such as Ja/Nein)
  std::map<std::string, std::string> effect;  // facts recorded when chosen
};

struct Question {
  std::string id;
  std::string text;
  std::vector<Alternative> alternatives;
};

struct Answer {
  std::string question_id;
  int choice;  // 1-based
  std::string surface;
};

/// Question-driven classification of a new root. Questions offer concrete
/// word forms to recognise; the class and flags are inferred from the picks.
struct DialogueState {
  std::string pos_track;  // VER, SUB, ADJ, or the closed-class pos
  std::string root;       // as typed
  std::vector<Answer> answered;
  std::optional<Question> pending;
  LexiconEntry draft;                        // complete iff !pending
  std::map<std::string, std::string> facts;  // accumulated answer effects

  bool complete() const { return !pending.has_value(); }
};

/// Decision trees exist for VER, SUB, ADJ and EIG; uninflected closed
/// classes complete at once. Throws DialogueError on an empty root or a
/// part of speech without a tree.
DialogueState start_classification(std::string_view pos, std::string_view root, const ParadigmSet& classes);

/// Throws DialogueError when the state is complete or the choice is out of range.
DialogueState answer(const DialogueState& state, int choice, const ParadigmSet& classes);

/// Renders a question the way the terminal dialogue shows it.
std::string format_question(const Question& q, int number);

}  // namespace morphy
