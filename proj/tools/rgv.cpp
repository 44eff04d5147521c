// rgv: command-line front end.
//
//   rgv <verify|simples|spherical|blocks|classify|report|run> CONFIG.json
//       [--genus N] [--format json|text] [--cap-group-order N]

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rgv/rgv.hpp"

namespace {

void emit(const nlohmann::json& doc, const std::string& format) {
  if (format == "text")
    std::cout << rgv::render_text(doc);
  else
    std::cout << doc.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Drinfeld centers of pointed categories: GV duality, ribbon checks, conformal blocks"};
  app.require_subcommand(1);

  std::string config_path;
  std::string format;
  int genus = -1;
  int cap = -1;

  const char* commands[][2] = {
      {"verify", "cocycle, pivotality, half-braiding and ribbon checks"},
      {"simples", "list the simple objects of the center"},
      {"spherical", "the four sphericity conditions"},
      {"blocks", "conformal block dimensions up to --genus"},
      {"classify", "Mueger center, Picard group and ribbon GV extensions"},
      {"report", "everything above"},
      {"run", "the command named in the config file"},
  };
  for (auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("config", config_path, "JSON config file")->required()->check(CLI::ExistingFile);
    sub->add_option("--genus", genus, "maximal genus for the blocks table")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--cap-group-order", cap, "largest group order accepted")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::string command = app.get_subcommands().front()->get_name();
  std::string fmt = format.empty() ? "json" : format;
  try {
    rgv::SessionConfig cfg = rgv::load_config(config_path);
    if (genus >= 0) cfg.genus = genus;
    if (cap > 0) cfg.cap_group_order = cap;
    if (!format.empty()) cfg.format = format;
    if (cfg.format != "json" && cfg.format != "text")
      throw rgv::Error(rgv::ErrorCode::config_parse, "format must be json or text", {{"format", cfg.format}});
    fmt = cfg.format;
    if (command == "run") {
      if (cfg.command.empty()) throw rgv::Error(rgv::ErrorCode::config_parse, "config has no 'command'");
      command = cfg.command;
    }
    emit(rgv::run_command(command, cfg), fmt);
    return 0;
  } catch (const rgv::Error& e) {
    emit({{"error", e.to_json()}}, fmt);
    std::cerr << "rgv: " << e.what() << "\n";
    return rgv::exit_status(e.code());
  } catch (const std::exception& e) {
    emit({{"error", {{"code", "internal"}, {"message", e.what()}}}}, fmt);
    std::cerr << "rgv: " << e.what() << "\n";
    return 1;
  }
}
