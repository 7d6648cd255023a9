#include "gavsa/corpus.hpp"

#include <sstream>
#include <stdexcept>

namespace gavsa {

namespace {

AtomSpec make_atom_spec() {
  AtomSpec spec;
  auto role = [&spec](const char* name) { spec.emplace_back(name, AtomKind::Role); };
  auto filler = [&spec](const char* name) { spec.emplace_back(name, AtomKind::Filler); };

  // 7 single-feature roles.
  for (const char* name : {"name", "sex", "age", "class", "type", "taste", "occupation"}) {
    role(name);
  }
  // 8 double-feature roles.
  for (const char* verb : {"bite", "flee", "see", "cause"}) {
    spec.emplace_back(std::string(verb) + "_agt", AtomKind::Role);
    spec.emplace_back(std::string(verb) + "_obj", AtomKind::Role);
  }
  // 10 named fillers.
  for (const char* name :
       {"Pat", "male", "66", "Fido", "John", "animal", "dog", "chickenlike", "7", "pet"}) {
    filler(name);
  }
  // 9 padding fillers.
  for (int i = 1; i <= 9; ++i) spec.emplace_back("filler_" + std::to_string(i), AtomKind::Filler);
  // 8 reserve atoms bringing the census to the table's 42; the four verbs
  // act as shared action ids under the Plate construction.
  for (const char* name :
       {"bite", "flee", "see", "cause", "pad_5", "pad_6", "pad_7", "pad_8"}) {
    filler(name);
  }
  return spec;
}

std::vector<SentenceSpec> make_sentence_specs() {
  auto two = [](const char* name, const char* verb, const char* role_a, const char* fill_a,
                const char* role_b, const char* fill_b) {
    return SentenceSpec{name, std::string(verb), {{role_a, fill_a}, {role_b, fill_b}}};
  };
  std::vector<SentenceSpec> specs;
  specs.push_back(two("(1a)", "bite", "bite_agt", "Fido", "bite_obj", "Pat"));
  specs.push_back(two("(2a)", "flee", "flee_agt", "Pat", "flee_obj", "Fido"));
  specs.push_back(two("(3a)", "see", "see_agt", "John", "see_obj", "(1a)"));
  // The records carry no action id; the Plate construction leaves them as
  // they stand in the table.
  specs.push_back(SentenceSpec{
      "PSmith", std::nullopt, {{"name", "Pat"}, {"sex", "male"}, {"age", "66"}}});
  specs.push_back(two("(1b)", "bite", "bite_agt", "Fido", "bite_obj", "PSmith"));
  specs.push_back(two("(2c)", "flee", "flee_agt", "PSmith", "flee_obj", "Fido"));
  specs.push_back(two("(4a)", "cause", "cause_agt", "(1a)", "cause_obj", "(2a)"));
  specs.push_back(two("(3b)", "see", "see_agt", "John", "see_obj", "(1b)"));
  specs.push_back(two("(5a)", "see", "see_agt", "John", "see_obj", "(4a)"));
  specs.push_back(two("(4c)", "cause", "cause_agt", "(1b)", "cause_obj", "(2a)"));
  specs.push_back(SentenceSpec{"DogFido",
                               std::nullopt,
                               {{"class", "animal"},
                                {"type", "dog"},
                                {"taste", "chickenlike"},
                                {"name", "Fido"},
                                {"age", "7"},
                                {"sex", "male"},
                                {"occupation", "pet"}}});
  specs.push_back(two("(1c)", "bite", "bite_agt", "DogFido", "bite_obj", "Pat"));
  specs.push_back(two("(2b)", "flee", "flee_agt", "Pat", "flee_obj", "DogFido"));
  specs.push_back(two("(4b)", "cause", "cause_agt", "(1b)", "cause_obj", "(2c)"));
  specs.push_back(two("(3c)", "see", "see_agt", "John", "see_obj", "(1c)"));
  specs.push_back(two("(5b)", "see", "see_agt", "John", "see_obj", "(4b)"));
  specs.push_back(two("(1d)", "bite", "bite_agt", "DogFido", "bite_obj", "PSmith"));
  specs.push_back(two("(2d)", "flee", "flee_agt", "PSmith", "flee_obj", "DogFido"));
  specs.push_back(two("(3d)", "see", "see_agt", "John", "see_obj", "(1d)"));
  return specs;
}

AnswerProfile make_profile(std::initializer_list<std::pair<int, std::int64_t>> p,
                           std::int64_t blades) {
  AnswerProfile profile;
  for (const auto& [k, pk] : p) profile.p[k] = pk;
  profile.noisy_blade_count = blades;
  return profile;
}

std::vector<QuestionCase> make_catalog() {
  std::vector<QuestionCase> cases;
  // One meaningful blade, answer Fido; the simple 1:3 estimator case.
  cases.push_back(QuestionCase{"(1b)#bite_agt", "(1b)", "bite_agt", "Fido",
                               QuestionMode::AppropriateReversed, 1, 3,
                               Construction::AgentObject,
                               make_profile({{1, 1}}, 4)});
  // Three meaningful blades (PSmith); potential answers PSmith and DogFido.
  cases.push_back(QuestionCase{"(1b)#bite_obj", "(1b)", "bite_obj", "PSmith",
                               QuestionMode::AppropriateReversed, 3, 1,
                               Construction::AgentObject,
                               make_profile({{3, 1}, {7, 1}}, 4)});
  // Two meaningful blades ((2a)); potential answers (2a), (2c), (2b).
  cases.push_back(QuestionCase{"(4a)#cause_obj", "(4a)", "cause_obj", "(2a)",
                               QuestionMode::RightHandSide, 3, 4,
                               Construction::AgentObjectOdd,
                               make_profile({{2, 1}, {4, 1}, {8, 1}}, 4)});
  cases.push_back(QuestionCase{"PSmith#name", "PSmith", "name", "Pat",
                               QuestionMode::RightHandSide, 1, 2,
                               Construction::AgentObject, std::nullopt});
  cases.push_back(QuestionCase{"(5a)#see_agt", "(5a)", "see_agt", "John",
                               QuestionMode::RightHandSide, 1, 4,
                               Construction::AgentObject, std::nullopt});
  cases.push_back(QuestionCase{"(5a)#see_obj", "(5a)", "see_obj", "(4a)",
                               QuestionMode::RightHandSide, 7, 2,
                               Construction::AgentObjectOdd, std::nullopt});
  cases.push_back(QuestionCase{"(3b)#see_obj", "(3b)", "see_obj", "(1b)",
                               QuestionMode::RightHandSide, 5, 2,
                               Construction::AgentObjectOdd, std::nullopt});
  cases.push_back(QuestionCase{"(5b)#see_obj", "(5b)", "see_obj", "(4b)",
                               QuestionMode::RightHandSide, 11, 2,
                               Construction::AgentObjectOdd, std::nullopt});
  cases.push_back(QuestionCase{"(3d)#see_obj", "(3d)", "see_obj", "(1d)",
                               QuestionMode::RightHandSide, 11, 2,
                               Construction::AgentObjectOdd, std::nullopt});
  return cases;
}

}  // namespace

const AtomSpec& table1_atom_spec() {
  static const AtomSpec spec = make_atom_spec();
  return spec;
}

const std::vector<SentenceSpec>& table1_sentence_specs() {
  static const std::vector<SentenceSpec> specs = make_sentence_specs();
  return specs;
}

CleanupMemory encode_table1(const Vocabulary& vocabulary, Construction construction, Rng& rng) {
  CleanupMemory memory(vocabulary.dimension);
  for (const Atom& atom : vocabulary.atoms) memory.add_atom(atom);
  for (const SentenceSpec& spec : table1_sentence_specs()) {
    memory.add(encode(spec, memory, vocabulary, construction, rng));
  }
  return memory;
}

Table1 build_table1(Rng& rng, int dimension, Construction construction) {
  Vocabulary vocabulary = draw_vocabulary(table1_atom_spec(), dimension, rng);
  CleanupMemory memory = encode_table1(vocabulary, construction, rng);
  return Table1{std::move(vocabulary), std::move(memory)};
}

MemoryProfile table1_profile(Construction construction, int dimension) {
  // Structural counts are independent of the drawn masks, so any seed works.
  Rng rng(0);
  Table1 corpus = build_table1(rng, dimension, construction);
  return corpus.memory.profile();
}

int table1_max_blade_count(Construction construction) {
  Rng rng(0);
  Table1 corpus = build_table1(rng, 1, construction);
  return corpus.memory.max_blade_count();
}

const std::vector<QuestionCase>& question_catalog() {
  static const std::vector<QuestionCase> catalog = make_catalog();
  return catalog;
}

const QuestionCase& find_question(std::string_view id) {
  for (const QuestionCase& q : question_catalog()) {
    if (q.id == id) return q;
  }
  throw std::invalid_argument("unknown question id: " + std::string(id));
}

std::string corpus_dump(const Table1& corpus) {
  std::ostringstream out;
  out << "dimension " << corpus.vocabulary.dimension << '\n';
  for (const Atom& atom : corpus.vocabulary.atoms) {
    out << "atom " << atom.name << ' '
        << (atom.kind == AtomKind::Role ? "role" : "filler") << ' '
        << format_blade(atom.mask, corpus.vocabulary.dimension) << '\n';
  }
  for (const EncodedItem& item : corpus.memory.items()) {
    if (item.kind.has_value()) continue;  // atoms already listed
    out << "sentence " << item.name << " blades " << item.blade_count;
    if (item.odding_mask.has_value()) {
      out << " odd " << format_blade(*item.odding_mask, corpus.vocabulary.dimension);
    }
    out << " = " << to_string(item.value) << '\n';
  }
  return out.str();
}

}  // namespace gavsa
