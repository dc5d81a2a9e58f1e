// Batch front-end: builds one verification job from the command line (or a
// whole suite from a file) and prints the report in human or record form.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "superfock/dsl.hpp"
#include "superfock/operators.hpp"
#include "superfock/report.hpp"

using nlohmann::json;
using namespace superfock;

namespace {

json pair_field(const std::string& text, const std::string& what) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw ParseError(what + " must be '<int>,<int>'", 1);
  return json::array({std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))});
}

struct CommonFlags {
  std::string dim = "1,0";
  std::string window;
  std::string margin;
  std::string aux = "trivial";
  std::string format = "text";
};

int emit(const CheckRecord& record, const std::string& format) {
  if (format == "records") std::cout << to_record_line(record) << "\n";
  else std::cout << to_text_line(record) << "\n";
  return record.ok() ? 0 : 1;
}

int run_one(json job, const std::string& format) {
  CheckRecord record = run_job_json(job.dump());
  return emit(record, format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification suite for graded trajectory algebras"};
  app.require_subcommand(1);
  CommonFlags flags;
  app.add_option("--format", flags.format, "text|records")->capture_default_str();

  json job;
  std::string suite_path;
  std::string out_path;

  // jacobi / modealg -------------------------------------------------------
  auto add_modealg_options = [&](CLI::App* cmd) {
    cmd->add_option("--spec", "builtin table or 'file'")->required(false);
    cmd->add_option("--c");
    cmd->add_option("--k");
    cmd->add_option("--k1");
    cmd->add_option("--k2");
    cmd->add_option("--n");
    cmd->add_option("--m");
    cmd->add_option("--a");
    cmd->add_option("--a1");
    cmd->add_option("--path");
  };
  auto harvest = [&](CLI::App* cmd, json& out) {
    for (const auto* opt : cmd->get_options()) {
      if (opt->count() == 0) continue;
      std::string name = opt->get_name();
      if (name.rfind("--", 0) == 0) name = name.substr(2);
      if (name == "format") continue;
      std::string value = opt->results().front();
      if (name == "n" || name == "m" || name == "mmax")
        out[name] = std::stoi(value);
      else
        out[name] = value;
    }
  };

  CLI::App* jacobi = app.add_subcommand("jacobi", "graded skewness and super-Jacobi of a table");
  add_modealg_options(jacobi);

  CLI::App* modealg = app.add_subcommand("modealg", "mode-algebra operations");
  CLI::App* mverify = modealg->add_subcommand("verify", "skewness + super-Jacobi");
  add_modealg_options(mverify);
  CLI::App* mredef = modealg->add_subcommand("redefine", "absorb removable parameters");
  mredef->add_option("--c");
  mredef->add_option("--k1");
  mredef->add_option("--k2");
  mredef->add_flag("--project");
  CLI::App* mparams = modealg->add_subcommand("params", "parameter table from (c, k1, k2)");
  mparams->add_option("--c");
  mparams->add_option("--k1");
  mparams->add_option("--k2");

  // fock --------------------------------------------------------------------
  CLI::App* fock = app.add_subcommand("fock", "trajectory module checks");
  CLI::App* fbasis = fock->add_subcommand("basis", "enumerate a window basis");
  CLI::App* fgen = fock->add_subcommand("generator", "assemble one generator matrix");
  CLI::App* fext = fock->add_subcommand("ext", "bracket defect against the extension");
  CLI::App* fcc = fock->add_subcommand("central-charge", "temporal Virasoro charge probe");
  CLI::App* fsc = fock->add_subcommand("superconformal", "extended superconformal table");
  CLI::App* fsr = fock->add_subcommand("sr", "extension closed forms and kernel laws");
  std::string xi_text, eta_text;
  int mmax = 2;
  for (CLI::App* cmd : {fbasis, fgen, fext, fcc, fsc, fsr}) {
    cmd->add_option("--dim", flags.dim)->capture_default_str();
    cmd->add_option("--aux", flags.aux)->capture_default_str();
    cmd->add_option("--window", flags.window);
  }
  for (CLI::App* cmd : {fgen, fext, fsr}) cmd->add_option("--xi", xi_text);
  for (CLI::App* cmd : {fext, fsr}) cmd->add_option("--eta", eta_text);
  fext->add_option("--margin", flags.margin);
  fsc->add_option("--mmax", mmax)->capture_default_str();
  fsr->add_option("--c");
  fsr->add_option("--k1");
  fsr->add_option("--k2");

  // gauge ---------------------------------------------------------------
  CLI::App* gauge = app.add_subcommand("gauge", "current-algebra checks");
  CLI::App* gverify = gauge->add_subcommand("verify", "finite superalgebra identities");
  gverify->add_option("--algebra");
  gverify->add_option("--path");
  CLI::App* gcocycle = gauge->add_subcommand("cocycle", "current bracket defect");
  CLI::App* ginter = gauge->add_subcommand("intertwine", "vector-field action on currents");
  std::vector<std::string> Xs, Ys;
  std::string level = "1";
  for (CLI::App* cmd : {gcocycle, ginter}) {
    cmd->add_option("--dim", flags.dim)->capture_default_str();
    cmd->add_option("--window", flags.window);
    cmd->add_option("--level", level)->capture_default_str();
    cmd->add_option("--algebra");
    cmd->add_option("--Y", Ys);
  }
  gcocycle->add_option("--X", Xs);
  ginter->add_option("--xi", xi_text);

  // suite ------------------------------------------------------------------
  CLI::App* suite = app.add_subcommand("suite", "run a suite file");
  CLI::App* srun = suite->add_subcommand("run", "run all jobs in a json suite file");
  srun->add_option("file", suite_path, "path to the suite json")->required();
  srun->add_option("--out", out_path, "also write the report to a file");

  // Let --format appear after any subcommand as well.
  for (CLI::App* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (CLI::App* inner : sub->get_subcommands({})) inner->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (jacobi->parsed() || (modealg->parsed() && mverify->parsed())) {
      CLI::App* cmd = jacobi->parsed() ? jacobi : mverify;
      job["check"] = "modealg.verify";
      if (cmd->get_option("--spec")->count() == 0) job["spec"] = "virasoro";
      harvest(cmd, job);
      return run_one(job, flags.format);
    }
    if (modealg->parsed() && mredef->parsed()) {
      job["check"] = "modealg.redefine";
      harvest(mredef, job);
      if (mredef->get_option("--project")->count()) job["project"] = true;
      return run_one(job, flags.format);
    }
    if (modealg->parsed() && mparams->parsed()) {
      job["check"] = "modealg.params";
      harvest(mparams, job);
      return run_one(job, flags.format);
    }
    if (fock->parsed()) {
      job["dim"] = pair_field(flags.dim, "--dim");
      job["aux"] = flags.aux;
      if (!flags.window.empty()) job["window"] = pair_field(flags.window, "--window");
      if (fbasis->parsed()) job["check"] = "fock.basis";
      if (fgen->parsed()) { job["check"] = "fock.generator"; job["xi"] = xi_text; }
      if (fext->parsed()) {
        job["check"] = "fock.ext";
        job["xi"] = xi_text;
        job["eta"] = eta_text;
        if (!flags.margin.empty()) job["margin"] = pair_field(flags.margin, "--margin");
      }
      if (fcc->parsed()) job["check"] = "fock.central-charge";
      if (fsc->parsed()) { job["check"] = "fock.superconformal"; job["mmax"] = mmax; }
      if (fsr->parsed()) {
        job["check"] = "fock.sr";
        job["xi"] = xi_text;
        job["eta"] = eta_text;
        harvest(fsr, job);
        job.erase("window");
        if (!flags.window.empty()) job["window"] = pair_field(flags.window, "--window");
        job["dim"] = pair_field(flags.dim, "--dim");
        job["aux"] = flags.aux;
      }
      return run_one(job, flags.format);
    }
    if (gauge->parsed()) {
      if (gverify->parsed()) {
        job["check"] = "gauge.verify";
        harvest(gverify, job);
        return run_one(job, flags.format);
      }
      CLI::App* cmd = gcocycle->parsed() ? gcocycle : ginter;
      job["check"] = gcocycle->parsed() ? "gauge.cocycle" : "gauge.intertwine";
      job["dim"] = pair_field(flags.dim, "--dim");
      if (!flags.window.empty()) job["window"] = pair_field(flags.window, "--window");
      job["level"] = level;
      if (cmd->get_option("--algebra")->count()) job["algebra"] = cmd->get_option("--algebra")->results().front();
      if (gcocycle->parsed()) job["X"] = Xs;
      job["Y"] = Ys;
      if (ginter->parsed()) job["xi"] = xi_text;
      return run_one(job, flags.format);
    }
    if (suite->parsed() && srun->parsed()) {
      std::ifstream in(suite_path);
      if (!in) throw ParseError("cannot open suite file '" + suite_path + "'", 1);
      std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      SuiteResult result = run_suite(text);
      std::string rendered =
          flags.format == "records" ? render_records(result) : render_text(result);
      std::cout << rendered;
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << rendered;
      }
      return result.all_ok() ? 0 : 1;
    }
  } catch (const MarginError& e) {
    std::cerr << "margin error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "no subcommand executed\n";
  return 2;
}
