#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <string>

#include "dsp_soliton.h"

namespace {

struct Text {
  char* ptr = nullptr;
  ~Text() { dsp_text_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

struct Handle {
  dsp_scenario* ptr = nullptr;
  ~Handle() { dsp_scenario_free(ptr); }
};

constexpr const char* kQuickConfig =
    "preset = \"paper-ultraslow\"\n"
    "[run]\n"
    "t_final = 1e-4\n"
    "dt = 1e-6\n"
    "snapshot_every = 50\n";

}  // namespace

TEST_CASE("version string") {
  CHECK(std::string(dsp_version()).find("dsp-soliton") != std::string::npos);
}

TEST_CASE("scenario parse, echo and free") {
  Handle s;
  char err[256] = {};
  REQUIRE(dsp_scenario_from_text(kQuickConfig, &s.ptr, err, sizeof(err)) == DSP_OK);
  REQUIRE(s.ptr != nullptr);
  Text echo;
  REQUIRE(dsp_scenario_echo(s.ptr, &echo.ptr, err, sizeof(err)) == DSP_OK);
  CHECK(echo.str().find("omega_start = 100000000") != std::string::npos);
  CHECK(echo.str().find("[medium]") != std::string::npos);
}

TEST_CASE("parse errors surface with line info") {
  Handle s;
  char err[256] = {};
  const dsp_code rc =
      dsp_scenario_from_text("preset = \"paper-ultraslow\"\n[grid]\npoints = 1000\n", &s.ptr,
                             err, sizeof(err));
  CHECK(rc == DSP_ERR_VALIDATION);
  CHECK(s.ptr == nullptr);
  CHECK(std::string(err).find("power of two") != std::string::npos);

  const dsp_code rc2 = dsp_scenario_from_text("[medium]\nbogus = 1\n", &s.ptr, err, sizeof(err));
  CHECK(rc2 == DSP_ERR_VALIDATION);
  CHECK(std::string(err).find("line 2") != std::string::npos);
}

TEST_CASE("coefficient report through the C surface") {
  Handle s;
  char err[256] = {};
  REQUIRE(dsp_scenario_from_text(kQuickConfig, &s.ptr, err, sizeof(err)) == DSP_OK);
  Text table;
  REQUIRE(dsp_coeffs_report(s.ptr, 0.0, &table.ptr, err, sizeof(err)) == DSP_OK);
  CHECK(table.str().find("regime,Bright") != std::string::npos);
  CHECK(table.str().find("v_g,0.074948") != std::string::npos);
}

TEST_CASE("regime classification") {
  CHECK(dsp_classify(1e8, -1e7) == DSP_REGIME_BRIGHT);
  CHECK(dsp_classify(3e6, -1e7) == DSP_REGIME_DARK);
  CHECK(dsp_classify(1e8, 1e7) == DSP_REGIME_DARK);
  CHECK(dsp_classify(3e6, 1e7) == DSP_REGIME_BRIGHT);
  CHECK(dsp_classify(1e8, 0.0) == DSP_REGIME_LINEAR);
  CHECK(dsp_classify(1e7, 1e7) == DSP_REGIME_SINGULAR);
  CHECK(dsp_classify(0.0, 1e7) == DSP_REGIME_INVALID);
  CHECK(std::strcmp(dsp_regime_name(DSP_REGIME_DARK), "Dark") == 0);
}

TEST_CASE("propagate writes outputs") {
  Handle s;
  char err[256] = {};
  REQUIRE(dsp_scenario_from_text(kQuickConfig, &s.ptr, err, sizeof(err)) == DSP_OK);
  const auto dir = std::filesystem::temp_directory_path() / "dsp_capi_prop";
  std::filesystem::remove_all(dir);
  Text summary;
  REQUIRE(dsp_propagate(s.ptr, dir.string().c_str(), &summary.ptr, err, sizeof(err)) == DSP_OK);
  CHECK(summary.str().find("status = ok") != std::string::npos);
  CHECK(std::filesystem::exists(dir / "diagnostics.csv"));
  CHECK(std::filesystem::exists(dir / "snap_000000.csv"));
  CHECK(std::filesystem::exists(dir / "snap_000100.csv"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("fig1 and sweep through the C surface") {
  Handle s;
  char err[256] = {};
  REQUIRE(dsp_scenario_from_text(kQuickConfig, &s.ptr, err, sizeof(err)) == DSP_OK);

  const auto dir = std::filesystem::temp_directory_path() / "dsp_capi_fig1";
  std::filesystem::remove_all(dir);
  Text fig;
  REQUIRE(dsp_fig1(s.ptr, dir.string().c_str(), &fig.ptr, err, sizeof(err)) == DSP_OK);
  CHECK(fig.str().find("tau_unit") != std::string::npos);
  CHECK(std::filesystem::exists(dir / "fig1.csv"));
  std::filesystem::remove_all(dir);

  const auto dir2 = std::filesystem::temp_directory_path() / "dsp_capi_sweep";
  std::filesystem::remove_all(dir2);
  Text table;
  REQUIRE(dsp_sweep(s.ptr, "control.omega_start", "1e8,5e7", dir2.string().c_str(),
                    &table.ptr, err, sizeof(err)) == DSP_OK);
  CHECK(table.str().find("measured_dxi_log_slope") != std::string::npos);
  CHECK(std::filesystem::exists(dir2 / "sweep.csv"));
  std::filesystem::remove_all(dir2);

  Text bad;
  CHECK(dsp_sweep(s.ptr, "nope.nope", "1.0", dir2.string().c_str(), &bad.ptr, err,
                  sizeof(err)) == DSP_ERR_VALIDATION);
  CHECK(std::string(err).find("unknown parameter path") != std::string::npos);

  Text bad2;
  CHECK(dsp_sweep(s.ptr, "control.omega_start", "1e8,abc", dir2.string().c_str(), &bad2.ptr,
                  err, sizeof(err)) == DSP_ERR_VALIDATION);
}

TEST_CASE("integration failure maps to its own code") {
  // an absurd field amplitude overflows the quartic diagnostics immediately
  const char* config =
      "preset = \"paper-ultraslow\"\n"
      "[init]\nprofile = gaussian\namplitude = 1e80\nwidth = 1e-4\n"
      "[run]\nt_final = 1e-5\ndt = 1e-6\nsnapshot_every = 0\n";
  Handle s;
  char err[256] = {};
  REQUIRE(dsp_scenario_from_text(config, &s.ptr, err, sizeof(err)) == DSP_OK);
  const auto dir = std::filesystem::temp_directory_path() / "dsp_capi_blowup";
  std::filesystem::remove_all(dir);
  Text summary;
  CHECK(dsp_propagate(s.ptr, dir.string().c_str(), &summary.ptr, err, sizeof(err)) ==
        DSP_ERR_INTEGRATION);
  CHECK(std::string(err).find("non-finite") != std::string::npos);
  // partial outputs are flushed
  CHECK(std::filesystem::exists(dir / "summary.txt"));
  CHECK(std::filesystem::exists(dir / "diagnostics.csv"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("null arguments are rejected") {
  char err[64] = {};
  CHECK(dsp_scenario_from_text(nullptr, nullptr, err, sizeof(err)) == DSP_ERR_VALIDATION);
  Text t;
  CHECK(dsp_coeffs_report(nullptr, 0.0, &t.ptr, err, sizeof(err)) == DSP_ERR_VALIDATION);
  dsp_scenario_free(nullptr);  // harmless
  dsp_text_free(nullptr);
}
