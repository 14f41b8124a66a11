#include "molcav/presets.hpp"

#include <functional>
#include <numbers>
#include <utility>

#include "molcav/error.hpp"
#include "molcav/thermal.hpp"

namespace molcav {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kRes = 101;

// omega_m / 2 pi = 30 THz throughout.
constexpr double kOmegaM = 2.0 * kPi * 30e12;

SystemParams direct_base(double G, double delta_tilde) {
  SystemParams p;
  p.omega_m_rad_s = kOmegaM;
  p.omega_1 = p.omega_2 = 1.0;
  p.drive = DirectDrive{G, G, delta_tilde};
  return p;
}

SweepAxis axis(std::string name, double lo, double hi, int count = kRes,
               AxisScale scale = AxisScale::linear) {
  return SweepAxis{std::move(name), lo, hi, count, scale};
}

void note(SweepSpec& s, std::string key, std::string value) {
  s.notes.emplace_back(std::move(key), std::move(value));
}

void omega_note(SweepSpec& s) {
  note(s, "omega_m", "temperatures converted with omega_m/2pi = 30 THz; captions also write omega = 30 THz");
}

// Shared by the Fig. 4 panels.
SweepSpec fig4_common(const char* name, double J, double theta) {
  SweepSpec s;
  s.preset = name;
  s.base = direct_base(0.2, 1.5);
  s.base.kappa = 1.0 / 3.0;
  s.base.gamma_1 = s.base.gamma_2 = 0.3;
  s.base.N_total = 100;
  s.base.M_split = 50;
  s.base.n_th = 0.001;
  s.base.J_m = J;
  s.base.theta = theta;
  s.outputs = {Quantity::E_B1B2};
  return s;
}

SweepSpec fig4a() {
  SweepSpec s = fig4_common("fig4a", 0.0, 0.0);
  s.axes = {axis("delta_tilde", 0.0, 3.0), axis("G_j", 0.0, 0.3)};
  s.citation = "fig4a: E_B1B2 over (delta_tilde, G_j); J_m=0, theta=0, N=100, M=N/2, kappa=omega_m/3, "
               "gamma_m=0.3 omega_m, n_th=0.001";
  return s;
}

SweepSpec fig4b() {
  SweepSpec s = fig4_common("fig4b", 0.02, kPi / 2);
  s.axes = {axis("delta_tilde", 0.0, 3.0), axis("G_j", 0.0, 0.3)};
  s.citation = "fig4b: E_B1B2 over (delta_tilde, G_j); J_m=0.02 omega_m, theta=pi/2, N=100, M=N/2, "
               "kappa=omega_m/3, gamma_m=0.3 omega_m, n_th=0.001";
  return s;
}

SweepSpec fig4c() {
  SweepSpec s = fig4_common("fig4c", 0.02, kPi / 2);
  s.axes = {axis("G_j", 0.0, 0.3), axis("J_m", 0.0, 0.04)};
  s.citation = "fig4c: E_B1B2 over (G_j, J_m); delta_tilde=1.5 omega_m, theta=pi/2, N=100, M=N/2, "
               "kappa=omega_m/3, gamma_m=0.3 omega_m, n_th=0.001";
  note(s, "axis_range", "J_m range chosen to extend past the 0.02 omega_m optimum");
  return s;
}

SweepSpec fig4d() {
  SweepSpec s = fig4_common("fig4d", 0.02, kPi / 2);
  s.axes = {axis("G_j", 0.0, 0.3), axis("J_m", 0.0, 0.02, 3)};
  s.citation = "fig4d: E_B1B2 vs G_j for J_m in {0, 0.01, 0.02} omega_m; delta_tilde=1.5 omega_m, "
               "theta=pi/2, N=100, M=N/2, kappa=omega_m/3, gamma_m=0.3 omega_m, n_th=0.001";
  return s;
}

SweepSpec fig2a() {
  SweepSpec s;
  s.preset = "fig2a";
  s.base = direct_base(0.1, 1.0);
  s.base.kappa = 1.0 / 3.0;
  s.base.gamma_1 = s.base.gamma_2 = 1e-4;
  s.base.g_m = 1e-4;
  s.base.n_th = temperature_to_nth(312.0, kOmegaM);
  s.base.N_total = 100;
  s.base.M_split = 50;
  s.axes = {axis("G_1", 0.01, 0.3), axis("omega_1", 0.5, 1.5)};
  s.outputs = {Quantity::G_minus};
  s.citation = "fig2a: G_minus over (G_1/G_2, omega_1/omega_2) at J_m=0; G_2=0.1 omega_m, omega_2=omega_m";
  note(s, "axis_range", "ratios realised by sweeping G_1 and omega_1 against G_2=0.1, omega_2=1");
  omega_note(s);
  return s;
}

SweepSpec fig2b() {
  SweepSpec s;
  s.preset = "fig2b";
  s.base = direct_base(0.1, 1.0);
  s.base.kappa = 1.0 / 3.0;
  s.base.gamma_1 = s.base.gamma_2 = 1e-4;
  s.base.g_m = 1e-4;
  s.base.J_m = 0.1;
  s.base.n_th = temperature_to_nth(312.0, kOmegaM);
  s.base.N_total = 100;
  s.base.M_split = 50;
  constexpr int n = 360;
  s.axes = {axis("theta", 0.0, 2.0 * kPi * (n - 1) / n, n)};
  s.outputs = {Quantity::Gt_plus, Quantity::Gt_minus};
  s.citation = "fig2b: |Gt_plus|, |Gt_minus| over theta in [0, 2pi); G_1=G_2=0.1 omega_m, J_m=0.1 omega_m, "
               "kappa=omega_m/3, gamma=1e-4 omega_m, g_v=1e-4 omega_m, T=312 K";
  note(s, "ensemble", "N, M not given for this panel; N=100, M=50 used (|Gt| is lambda-independent "
                      "for degenerate modes)");
  note(s, "g_v", "caption coupling g_v read as g_m");
  omega_note(s);
  return s;
}

SweepSpec fig3_common(const char* name) {
  SweepSpec s;
  s.preset = name;
  s.base = direct_base(0.1, 1.0);
  s.base.kappa = 1.0 / 3.0;
  s.base.gamma_1 = s.base.gamma_2 = 1e-4;
  s.base.g_m = 1e-3;
  s.base.n_th = temperature_to_nth(312.0, kOmegaM);
  s.base.N_total = 100;
  s.base.M_split = 0;
  std::get<DirectDrive>(s.base.drive).G_1 = 0.0;
  s.outputs = {Quantity::E_aB1, Quantity::E_aB2};
  note(s, "M_split", "M=0 as printed: B1 is empty, so G_1=0 and lambda=J_m sqrt(M(N-M))=0");
  note(s, "g_v", "caption coupling g_v read as g_m");
  omega_note(s);
  return s;
}

SweepSpec fig3a() {
  SweepSpec s = fig3_common("fig3a");
  s.axes = {axis("delta_tilde", 0.0, 3.0), axis("G_j", 0.0, 0.3)};
  s.citation = "fig3a: E_aB2 over (delta_tilde, G_j); J_m=0, theta=0, kappa=omega_m/3, gamma=1e-4 omega_m, "
               "g_v=1e-3 omega_m, T=312 K, M=0, N=100";
  return s;
}

SweepSpec fig3b() {
  SweepSpec s = fig3_common("fig3b");
  std::get<DirectDrive>(s.base.drive).delta_tilde = 0.7;
  s.base.theta = kPi / 2;
  s.axes = {axis("G_j", 0.0, 0.3), axis("J_m", 0.0, 0.04)};
  s.citation = "fig3b: E_aB2 over (G_j, J_m); delta_tilde=0.7 omega_m, theta=pi/2, kappa=omega_m/3, "
               "gamma=1e-4 omega_m, g_v=1e-3 omega_m, T=312 K, M=0, N=100";
  note(s, "delta_tilde", "caption value 0.7 omega_m used; the discussion text says omega_m");
  return s;
}

SweepSpec fig5_common(const char* name, double J, double theta) {
  SweepSpec s;
  s.preset = name;
  s.base = direct_base(0.2, 1.5);
  s.base.gamma_1 = s.base.gamma_2 = 0.3;
  s.base.N_total = 100;
  s.base.M_split = 50;
  s.base.n_th = temperature_to_nth(210.0, kOmegaM);
  s.base.J_m = J;
  s.base.theta = theta;
  s.outputs = {Quantity::E_B1B2};
  note(s, "G_j", "G_j=0.2 omega_m (stated for panel d, used for all panels)");
  omega_note(s);
  return s;
}

SweepSpec fig5_m(const char* name, double J, double theta) {
  SweepSpec s = fig5_common(name, J, theta);
  s.axes = {axis("M_split", 0.0, 100.0), axis("kappa", 0.05, 2.0)};
  s.citation = std::string(name) + ": E_B1B2 over (M, kappa); J_m=" + (J == 0.0 ? "0" : "0.02 omega_m") +
               ", theta=" + (theta == 0.0 ? "0" : "pi/2") +
               ", gamma_m=0.3 omega_m, delta_tilde=1.5 omega_m, N=100, T=210 K";
  return s;
}

SweepSpec fig5_n(const char* name, double J, double theta) {
  SweepSpec s = fig5_common(name, J, theta);
  s.axes = {axis("N_total", 2.0, 200.0, 100), axis("kappa", 0.05, 2.0)};
  s.m_follows_half_n = true;
  s.citation = std::string(name) + ": E_B1B2 over (N, kappa) with M=N/2; J_m=" +
               (J == 0.0 ? "0" : "0.02 omega_m") + ", theta=" + (theta == 0.0 ? "0" : "pi/2") +
               ", G_j=0.2 omega_m, gamma_m=0.3 omega_m, delta_tilde=1.5 omega_m, T=210 K";
  return s;
}

SweepSpec fig6_common(const char* name, Quantity q) {
  SweepSpec s;
  s.preset = name;
  s.base = direct_base(0.2, 1.5);
  s.base.kappa = 1.0 / 3.0;
  s.base.gamma_1 = s.base.gamma_2 = 0.3;
  s.base.N_total = 100;
  s.base.M_split = 50;
  s.base.theta = kPi / 2;
  s.base.J_m = 0.02;
  s.outputs = {q};
  note(s, "temperature", "T axis converted to n_th per point; caption values honoured even where "
                         "they disagree with n_th=0.001 ~ 210 K elsewhere");
  omega_note(s);
  return s;
}

SweepSpec fig6_map(const char* name, Quantity q) {
  SweepSpec s = fig6_common(name, q);
  s.axes = {axis("delta_tilde", 0.0, 3.0), axis("T", 0.0, 600.0)};
  s.citation = std::string(name) + ": " + std::string(to_string(q)) +
               " over (delta_tilde, T); J_m=0.02 omega_m, kappa=omega_m/3, G_j=0.2 omega_m, "
               "gamma_m=0.3 omega_m, N=100, M=N/2, theta=pi/2";
  return s;
}

SweepSpec fig6_lines(const char* name, Quantity q) {
  SweepSpec s = fig6_common(name, q);
  s.axes = {axis("T", 0.0, 600.0), axis("J_m", 0.0, 0.02, 3)};
  s.citation = std::string(name) + ": " + std::string(to_string(q)) +
               " vs T for J_m in {0, 0.01, 0.02} omega_m; delta_tilde=1.5 omega_m, kappa=omega_m/3, "
               "G_j=0.2 omega_m, gamma_m=0.3 omega_m, N=100, M=N/2, theta=pi/2";
  return s;
}

SweepSpec tripartite_base(const char* name, double gamma, double kappa) {
  SweepSpec s;
  s.preset = name;
  s.base = direct_base(0.2, 1.5);
  s.base.kappa = kappa;
  s.base.gamma_1 = s.base.gamma_2 = gamma;
  s.base.N_total = 200;
  s.base.M_split = 100;
  s.base.theta = kPi / 2;
  s.base.n_th = 0.001;
  s.outputs = {Quantity::R_min};
  return s;
}

SweepSpec fig7(const char* name, double gamma) {
  SweepSpec s = tripartite_base(name, gamma, 0.2);
  s.axes = {axis("G_j", 0.0, 0.3), axis("J_m", 0.0, 0.03)};
  s.citation = std::string(name) + ": R_min over (G_j, J_m); gamma_m=" +
               (gamma < 0.01 ? "1e-3" : "0.3") +
               " omega_m, kappa=0.2 omega_m, delta_tilde=1.5 omega_m, N=200, M=N/2, theta=pi/2, "
               "n_th=0.001 (T~210 K)";
  note(s, "axis_range", "G_j and J_m ranges not printed; chosen to bracket G_j~0.2 and J_m=0.02");
  return s;
}

SweepSpec fig8a() {
  SweepSpec s = tripartite_base("fig8a", 0.3, 0.2);
  s.base.J_m = 0.01;
  s.axes = {axis("gamma_1", 0.001, 0.6), axis("gamma_2", 0.001, 0.6)};
  s.citation = "fig8a: R_min over (gamma_1, gamma_2), DMB with J_m=0.01 omega_m; kappa=0.2 omega_m, "
               "G_j=0.2 omega_m, delta_tilde=1.5 omega_m, N=200, M=N/2, theta=pi/2, n_th=0.001";
  return s;
}

SweepSpec fig8b() {
  SweepSpec s = tripartite_base("fig8b", 0.3, 0.2);
  s.axes = {axis("gamma_m", 0.001, 0.6), axis("J_m", 0.0, 0.01, 2)};
  s.citation = "fig8b: R_min vs gamma_m for J_m in {0 (DMU), 0.01 omega_m (DMB)}; kappa=0.2 omega_m, "
               "G_j=0.2 omega_m, delta_tilde=1.5 omega_m, N=200, M=N/2, theta=pi/2, n_th=0.001";
  return s;
}

SweepSpec fig9a() {
  SweepSpec s = tripartite_base("fig9a", 0.3, 1.0 / 3.0);
  s.base.J_m = 0.02;
  s.axes = {axis("G_1", 0.0, 0.3), axis("G_2", 0.0, 0.3)};
  s.citation = "fig9a: R_min over (G_1, G_2) in the DMB regime; gamma_m=0.3 omega_m, delta_tilde=1.5 omega_m, "
               "N=200, M=N/2, theta=pi/2, n_th=0.001, kappa=omega_m/3";
  note(s, "J_m", "DMB hopping for the map not printed; J_m=0.02 omega_m used");
  return s;
}

SweepSpec fig9b() {
  SweepSpec s = tripartite_base("fig9b", 0.3, 1.0 / 3.0);
  s.axes = {axis("G_j", 0.0, 0.3), axis("J_m", 0.0, 0.02, 3)};
  s.citation = "fig9b: R_min vs G_j for J_m in {0, 0.01, 0.02} omega_m; gamma_m=0.3 omega_m, "
               "delta_tilde=1.5 omega_m, N=200, M=N/2, theta=pi/2, n_th=0.001, kappa=omega_m/3";
  return s;
}

SweepSpec fig10(const char* name, double gamma) {
  SweepSpec s = tripartite_base(name, gamma, 0.2);
  s.axes = {axis("n_th", 1e-3, 10.0, kRes, AxisScale::log), axis("J_m", 0.0, 0.02, 2)};
  s.citation = std::string(name) + ": R_min vs n_th for J_m in {0 (DMU), 0.02 omega_m (DMB)}; gamma_m=" +
               (gamma < 0.01 ? "1e-3" : "0.3") +
               " omega_m, kappa=0.2 omega_m, G_j=0.2 omega_m, delta_tilde=1.5 omega_m, N=200, M=N/2, "
               "theta=pi/2";
  return s;
}

using Builder = std::function<SweepSpec()>;

const std::vector<std::pair<std::string, Builder>>& registry() {
  static const std::vector<std::pair<std::string, Builder>> r = {
      {"fig2a", fig2a},
      {"fig2b", fig2b},
      {"fig3a", fig3a},
      {"fig3b", fig3b},
      {"fig4a", fig4a},
      {"fig4b", fig4b},
      {"fig4c", fig4c},
      {"fig4d", fig4d},
      {"fig5a", [] { return fig5_m("fig5a", 0.0, 0.0); }},
      {"fig5b", [] { return fig5_n("fig5b", 0.0, 0.0); }},
      {"fig5c", [] { return fig5_m("fig5c", 0.02, kPi / 2); }},
      {"fig5d", [] { return fig5_n("fig5d", 0.02, kPi / 2); }},
      {"fig6a", [] { return fig6_map("fig6a", Quantity::E_aB2); }},
      {"fig6b", [] { return fig6_map("fig6b", Quantity::E_B1B2); }},
      {"fig6c", [] { return fig6_lines("fig6c", Quantity::E_aB2); }},
      {"fig6d", [] { return fig6_lines("fig6d", Quantity::E_B1B2); }},
      {"fig7a", [] { return fig7("fig7a", 1e-3); }},
      {"fig7b", [] { return fig7("fig7b", 0.3); }},
      {"fig8a", fig8a},
      {"fig8b", fig8b},
      {"fig9a", fig9a},
      {"fig9b", fig9b},
      {"fig10a", [] { return fig10("fig10a", 1e-3); }},
      {"fig10b", [] { return fig10("fig10b", 0.3); }},
  };
  return r;
}

}  // namespace

std::vector<PresetInfo> list_presets() {
  std::vector<PresetInfo> out;
  for (const auto& [name, build] : registry()) out.push_back({name, build().citation});
  return out;
}

SweepSpec figure_preset(std::string_view name) {
  for (const auto& [n, build] : registry()) {
    if (n == name) {
      SweepSpec s = build();
      s.output_path = n + ".csv";
      return s;
    }
  }
  throw Error(ErrorKind::UnknownPreset, "no figure preset named '" + std::string(name) + "'");
}

}  // namespace molcav
