#pragma once

#include <cstdint>
#include <string>

#include "core/engine.hpp"
#include "core/medium.hpp"

namespace dsp {

struct GridConfig {
  std::size_t points = 4096;
  double length = 8e-3;  // m
};

enum class InitKind { Bright, Dark, PrintedForm, Gaussian, Zero, File };

struct InitConfig {
  InitKind kind = InitKind::Bright;
  double amplitude = 0;  // 0 selects the amplitude law for soliton kinds
  double width = 0;      // gaussian only (m)
  double center = 0;     // m
  std::string path;      // file kind only
};

struct RunConfig {
  double t_final = 1e-2;            // s
  double dt = 1e-6;                 // s
  std::size_t snapshot_every = 1000;  // steps; 0 = endpoints only
  PropagationMode mode = PropagationMode::Physical;
  PerturbationModel perturbation = PerturbationModel::ExactLogCn;
};

// A fully validated run description. Parsed from an INI-style text with
// sections [medium], [probe], [control], [grid], [init], [run]; a top-level
// `preset = "paper-ultraslow"` expands before explicit keys override it.
struct Scenario {
  MediumParams medium;
  ProbeSpec probe;
  ControlSchedule control;
  GridConfig grid;
  InitConfig init;
  RunConfig run;

  void validate() const;
};

Scenario parse_scenario(const std::string& text);
Scenario load_scenario_file(const std::string& path);

// Canonical text form; parsing it reproduces the same scenario byte for byte.
std::string echo_scenario(const Scenario& s);

std::uint64_t scenario_hash(const Scenario& s);

// Dotted path override, e.g. ("control.omega_start", "5e7").
void apply_override(Scenario& s, const std::string& path, const std::string& value);

std::string init_kind_name(InitKind kind);

}  // namespace dsp
