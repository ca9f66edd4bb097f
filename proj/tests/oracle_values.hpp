// Copyright 2026 The ndpo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generated by tests/oracles/gaussian_moments.py; do not edit.
// Values come from the covariance equations, not the closed forms.

#pragma once

#include <complex>

namespace ndpo::oracle {

struct MomentRow {
  double gamma, kappa_gamma0, r;
  /// Negative means the stationary state.
  double t;
  double v1_two, v2_two, v1_single, v2_single, n_a, n_b;
};

inline constexpr MomentRow kMoments[] = {
    {1.0, 0.0, 0.0, 0.0, 0.9999999999999998, 0.9999999999999998, 1.0, 1.0, 0.0, 0.0},
    {1.0, 0.0, 0.0, 0.5, 0.9999999999999998, 0.9999999999999998, 1.0, 1.0, 0.0, 0.0},
    {1.0, 0.0, 0.0, 1.0, 0.9999999999999998, 0.9999999999999998, 1.0, 1.0, 0.0, 0.0},
    {1.0, 0.0, 0.0, 2.0, 0.9999999999999998, 0.9999999999999998, 1.0, 1.0, 0.0, 0.0},
    {1.0, 0.0, 0.0, 5.0, 0.9999999999999984, 0.9999999999999991, 0.9999999999999986, 0.9999999999999986, -7.216449660063518e-16, -3.3306690738754696e-16},
    {1.0, 0.0, 0.0, 10.0, 0.9999999999999984, 0.9999999999999991, 0.9999999999999986, 0.9999999999999986, -7.216449660063518e-16, -3.3306690738754696e-16},
    {1.0, 0.0, 0.0, -1.0, 0.9999999999999998, 0.9999999999999998, 1.0, 1.0, 0.0, 0.0},
    {1.0, 0.2, 0.0, 0.0, 0.9999999999999998, 0.9999999999999998, 1.0, 1.0, 0.0, 0.0},
    {1.0, 0.2, 0.0, 0.5, 0.8561672296546881, 1.1727878528788542, 1.0144775412667713, 1.0144775412667713, 0.007238770633385627, 0.007238770633385738},
    {1.0, 0.2, 0.0, 1.0, 0.7847419896976016, 1.3007922426039822, 1.042767116150792, 1.0427671161507919, 0.021383558075396047, 0.021383558075396047},
    {1.0, 0.2, 0.0, 2.0, 0.7316600178929198, 1.4658705253918651, 1.0987652716423926, 1.0987652716423926, 0.049382635821196286, 0.049382635821196286},
    {1.0, 0.2, 0.0, 5.0, 0.7145462519901583, 1.6334752877547574, 1.174010769872458, 1.174010769872458, 0.087005384936229, 0.08700538493622911},
    {1.0, 0.2, 0.0, 10.0, 0.7142859518653484, 1.6650141652155561, 1.1896500585404524, 1.1896500585404521, 0.09482502927022618, 0.09482502927022618},
    {1.0, 0.2, 0.0, -1.0, 0.7142857142857141, 1.6666666666666663, 1.1904761904761902, 1.1904761904761902, 0.09523809523809512, 0.09523809523809523},
    {1.0, 0.2, 0.5, 0.0, 0.9999999999999998, 0.9999999999999998, 1.0, 1.0, 0.0, 0.0},
    {1.0, 0.2, 0.5, 0.5, 0.6288681017333434, 1.9150334223293322, 0.7642995346553887, 1.6945318705186003, 0.11470785129349725, 0.11470785129349725},
    {1.0, 0.2, 0.5, 1.0, 0.4445694552859133, 2.592906854123651, 0.6350096483372922, 2.1511668313267025, 0.19654411991599874, 0.19654411991599874},
    {1.0, 0.2, 0.5, 2.0, 0.3076019692789884, 3.46711267088064, 0.5186283262698522, 2.6757409882663064, 0.2985923286340396, 0.2985923286340397},
    {1.0, 0.2, 0.5, 5.0, 0.26344329521094045, 4.354697977071919, 0.4479183503583259, 3.147734599619587, 0.39891323749447827, 0.39891323749447827},
    {1.0, 0.2, 0.5, 10.0, 0.26277164243523504, 4.521718554609938, 0.43843149664419095, 3.2316738245442007, 0.41752633029709796, 0.41752633029709796},
    {1.0, 0.2, 0.5, -1.0, 0.26277102940817304, 4.530469714098407, 0.43795171568028834, 3.236049795784577, 0.4185003778662163, 0.4185003778662164},
    {1.0, 0.4, 1.0, 0.0, 0.9999999999999998, 0.9999999999999998, 1.0, 1.0, 0.0, 0.0},
    {1.0, 0.4, 1.0, 0.5, 0.4511874726184907, 4.420645701292863, 0.710209582786302, 3.631632701345681, 0.5854605710329956, 0.5854605710329956},
    {1.0, 0.4, 1.0, 1.0, 0.22805695009961258, 7.5157739256665, 0.5847241637744941, 5.5537734460469546, 1.0346244024553621, 1.034624402455362},
    {1.0, 0.4, 1.0, 2.0, 0.10045562218069777, 12.85043841871331, 0.4969311589761687, 8.435314287506968, 1.7330613616207842, 1.7330613616207837},
    {1.0, 0.4, 1.0, 5.0, 0.07530039954621004, 23.721750793529452, 0.43546045753069745, 13.913199384157073, 3.0871649604219424, 3.0871649604219424},
    {1.0, 0.4, 1.0, 10.0, 0.07518628254967884, 32.080615777889804, 0.3978098937628408, 18.092823448336407, 4.122658335524812, 4.122658335524812},
    {1.0, 0.4, 1.0, -1.0, 0.0751862684647846, 36.94528049465323, 0.37593134232392317, 20.52515583036291, 4.725271793171708, 4.725271793171708},
    {1.0, 0.45, 0.25, 0.0, 0.9999999999999998, 0.9999999999999998, 1.0, 1.0, 0.0, 0.0},
    {1.0, 0.45, 0.25, 0.5, 0.5825096400959934, 1.755320276600307, 0.9147737789590874, 1.3371077866269712, 0.06297039139651461, 0.06297039139651461},
    {1.0, 0.45, 0.25, 1.0, 0.42104899102433047, 2.473803148624537, 0.9515383226231799, 1.680665964649513, 0.15805107181817324, 0.15805107181817324},
    {1.0, 0.45, 0.25, 2.0, 0.334456088014293, 3.8073553843192314, 1.126320200152257, 2.3390310000084598, 0.36633780004017913, 0.36633780004017913},
    {1.0, 0.45, 0.25, 5.0, 0.3192776201366622, 7.093743366713917, 1.6561602326306037, 3.9807506516129667, 0.9092277210608926, 0.9092277210608926},
    {1.0, 0.45, 0.25, 10.0, 0.3192266668208834, 10.789785551046398, 2.2605555518171823, 5.8287667944989865, 1.5223305865790424, 1.5223305865790424},
    {1.0, 0.45, 0.25, -1.0, 0.31922666300664915, 16.487212707001277, 3.1922666300664906, 8.677480372105936, 2.467436750543107, 2.467436750543107},
    {2.0, 0.3, 0.75, 0.0, 0.9999999999999998, 0.9999999999999998, 1.0, 1.0, 0.0, 0.0},
    {2.0, 0.3, 0.75, 0.5, 0.3973934065134061, 3.719654077856548, 0.5272229278567621, 3.2500492093598563, 0.4443180343041546, 0.4443180343041544},
    {2.0, 0.3, 0.75, 1.0, 0.2331639510963874, 5.070194324316489, 0.35995684329901295, 4.167933176896174, 0.6319725050487968, 0.6319725050487965},
    {2.0, 0.3, 0.75, 2.0, 0.17620829384057313, 6.073891887345292, 0.26819603618734456, 4.753921742755229, 0.7555294447356433, 0.7555294447356433},
    {2.0, 0.3, 0.75, 5.0, 0.17164045709922787, 6.397486594679276, 0.24550952080340482, 4.92246709682914, 0.7919941544081364, 0.7919941544081361},
    {2.0, 0.3, 0.75, 10.0, 0.17163858473379381, 6.402408465364298, 0.2451982614236092, 4.924930798190545, 0.7925322649035385, 0.7925322649035382},
    {2.0, 0.3, 0.75, -1.0, 0.1716385847295611, 6.402412957625806, 0.2451979781850873, 4.924933044327544, 0.7925327556281578, 0.7925327556281581},
    {0.0, 0.3, 0.0, 0.0, 0.9999999999999998, 0.9999999999999998, 1.0, 1.0, 0.0, 0.0},
    {0.0, 0.3, 0.0, 0.5, 0.7408182206817178, 1.3498588075760027, 1.0453385141288605, 1.0453385141288605, 0.022669257064430237, 0.022669257064430237},
    {0.0, 0.3, 0.0, 1.0, 0.5488116360940263, 1.8221188003905087, 1.1854652182422676, 1.1854652182422676, 0.09273260912113379, 0.09273260912113379},
    {0.0, 0.3, 0.0, 2.0, 0.30119421191220197, 3.3201169227365472, 1.8106555673243747, 1.8106555673243747, 0.40532778366218736, 0.40532778366218736},
    {0.0, 0.3, 0.0, 5.0, 0.049787068367866005, 20.085536923188794, 10.06766199577833, 10.06766199577833, 4.533830997889165, 4.533830997889166},
    {0.0, 0.3, 0.0, 10.0, 0.0024787521766466113, 403.42879349278036, 201.71563612247851, 201.71563612247851, 100.35781806123926, 100.35781806123927},
    {1.0, 0.5, 0.5, 0.0, 0.9999999999999998, 0.9999999999999998, 1.0, 1.0, 0.0, 0.0},
    {1.0, 0.5, 0.5, 0.5, 0.48415152013885704, 2.359140914229522, 0.8340456203622891, 1.7930806348152435, 0.15678156379438313, 0.15678156379438324},
    {1.0, 0.5, 0.5, 1.0, 0.29438146963840217, 3.7182818284590433, 0.8311304554049223, 2.514409152669729, 0.3363849020186628, 0.3363849020186628},
    {1.0, 0.5, 0.5, 2.0, 0.1988863859749126, 6.436563656918087, 0.9673226341588984, 3.894563337926206, 0.715471493021276, 0.715471493021276},
    {1.0, 0.5, 0.5, 5.0, 0.18397676966508822, 14.591409142295225, 1.5116869877611503, 7.975266875776232, 1.871738465884346, 1.8717384658843454},
    {1.0, 0.5, 0.5, 10.0, 0.18393972226774555, 28.182818284590418, 2.4313670669910823, 14.770979599039846, 3.8005866665077317, 3.8005866665077317},
};

struct HusimiRow {
  double gamma, kappa_gamma0, r, t;
  std::complex<double> alpha, beta;
  double q;
};

inline const HusimiRow kHusimi[] = {
    {1.0, 0.0, 0.0, 0.5, {0.0, 0.0}, {0.0, 0.0}, 0.10132118364233779},
    {1.0, 0.0, 0.0, 0.5, {0.5, 0.0}, {0.0, 0.0}, 0.07890901716237429},
    {1.0, 0.0, 0.0, 0.5, {0.5, 0.5}, {-0.5, 0.0}, 0.04786073823677039},
    {1.0, 0.0, 0.0, 0.5, {0.0, 1.0}, {1.0, 0.0}, 0.013712331086104635},
    {1.0, 0.0, 0.0, 0.5, {-1.0, 0.5}, {0.5, -1.0}, 0.008316949219853095},
    {1.0, 0.0, 0.0, 2.0, {0.0, 0.0}, {0.0, 0.0}, 0.10132118364233779},
    {1.0, 0.0, 0.0, 2.0, {0.5, 0.0}, {0.0, 0.0}, 0.07890901716237429},
    {1.0, 0.0, 0.0, 2.0, {0.5, 0.5}, {-0.5, 0.0}, 0.04786073823677039},
    {1.0, 0.0, 0.0, 2.0, {0.0, 1.0}, {1.0, 0.0}, 0.013712331086104635},
    {1.0, 0.0, 0.0, 2.0, {-1.0, 0.5}, {0.5, -1.0}, 0.008316949219853095},
    {1.0, 0.2, 0.0, 0.5, {0.0, 0.0}, {0.0, 0.0}, 0.10049068816030218},
    {1.0, 0.2, 0.0, 0.5, {0.5, 0.0}, {0.0, 0.0}, 0.07828213173462145},
    {1.0, 0.2, 0.0, 0.5, {0.5, 0.5}, {-0.5, 0.0}, 0.049406458805808295},
    {1.0, 0.2, 0.0, 0.5, {0.0, 1.0}, {1.0, 0.0}, 0.013627632297795357},
    {1.0, 0.2, 0.0, 0.5, {-1.0, 0.5}, {0.5, -1.0}, 0.00826978185280953},
    {1.0, 0.2, 0.0, 2.0, {0.0, 0.0}, {0.0, 0.0}, 0.09491335972544646},
    {1.0, 0.2, 0.0, 2.0, {0.5, 0.0}, {0.0, 0.0}, 0.07423310858943324},
    {1.0, 0.2, 0.0, 2.0, {0.5, 0.5}, {-0.5, 0.0}, 0.04948521617162439},
    {1.0, 0.2, 0.0, 2.0, {0.0, 1.0}, {1.0, 0.0}, 0.013288922007461745},
    {1.0, 0.2, 0.0, 2.0, {-1.0, 0.5}, {0.5, -1.0}, 0.008128873290701888},
    {1.0, 0.2, 0.5, 0.5, {0.0, 0.0}, {0.0, 0.0}, 0.08579203263855852},
    {1.0, 0.2, 0.5, 0.5, {0.5, 0.0}, {0.0, 0.0}, 0.06451177393379309},
    {1.0, 0.2, 0.5, 0.5, {0.5, 0.5}, {-0.5, 0.0}, 0.04204429969003167},
    {1.0, 0.2, 0.5, 0.5, {0.0, 1.0}, {1.0, 0.0}, 0.012992399885694087},
    {1.0, 0.2, 0.5, 0.5, {-1.0, 0.5}, {0.5, -1.0}, 0.008321625168177077},
    {1.0, 0.2, 0.5, 2.0, {0.0, 0.0}, {0.0, 0.0}, 0.07507647501847438},
    {1.0, 0.2, 0.5, 2.0, {0.5, 0.0}, {0.0, 0.0}, 0.05366602188014689},
    {1.0, 0.2, 0.5, 2.0, {0.5, 0.5}, {-0.5, 0.0}, 0.03651483277668687},
    {1.0, 0.2, 0.5, 2.0, {0.0, 1.0}, {1.0, 0.0}, 0.011078917485971392},
    {1.0, 0.2, 0.5, 2.0, {-1.0, 0.5}, {0.5, -1.0}, 0.007318817619574984},
    {1.0, 0.4, 1.0, 0.5, {0.0, 0.0}, {0.0, 0.0}, 0.05253041883705629},
    {1.0, 0.4, 1.0, 0.5, {0.5, 0.0}, {0.0, 0.0}, 0.03894563237296836},
    {1.0, 0.4, 1.0, 0.5, {0.5, 0.5}, {-0.5, 0.0}, 0.028286945192832015},
    {1.0, 0.4, 1.0, 0.5, {0.0, 1.0}, {1.0, 0.0}, 0.010173337297033474},
    {1.0, 0.4, 1.0, 0.5, {-1.0, 0.5}, {0.5, -1.0}, 0.0074998581241925485},
    {1.0, 0.4, 1.0, 2.0, {0.0, 0.0}, {0.0, 0.0}, 0.033671322982752584},
    {1.0, 0.4, 1.0, 2.0, {0.5, 0.0}, {0.0, 0.0}, 0.023510115097369156},
    {1.0, 0.4, 1.0, 2.0, {0.5, 0.5}, {-0.5, 0.0}, 0.018553326422207306},
    {1.0, 0.4, 1.0, 2.0, {0.0, 1.0}, {1.0, 0.0}, 0.006100604931855404},
    {1.0, 0.4, 1.0, 2.0, {-1.0, 0.5}, {0.5, -1.0}, 0.005128911713538692},
    {1.0, 0.45, 0.25, 0.5, {0.0, 0.0}, {0.0, 0.0}, 0.09346955606349935},
    {1.0, 0.45, 0.25, 0.5, {0.5, 0.0}, {0.0, 0.0}, 0.07140738385451433},
    {1.0, 0.45, 0.25, 0.5, {0.5, 0.5}, {-0.5, 0.0}, 0.04801860854177248},
    {1.0, 0.45, 0.25, 0.5, {0.0, 1.0}, {1.0, 0.0}, 0.013152743763479548},
    {1.0, 0.45, 0.25, 0.5, {-1.0, 0.5}, {0.5, -1.0}, 0.008290061961532124},
    {1.0, 0.45, 0.25, 2.0, {0.0, 0.0}, {0.0, 0.0}, 0.06848505166101289},
    {1.0, 0.45, 0.25, 2.0, {0.5, 0.0}, {0.0, 0.0}, 0.0521228557901751},
    {1.0, 0.45, 0.25, 2.0, {0.5, 0.5}, {-0.5, 0.0}, 0.04037834703888282},
    {1.0, 0.45, 0.25, 2.0, {0.0, 1.0}, {1.0, 0.0}, 0.010935296163031535},
    {1.0, 0.45, 0.25, 2.0, {-1.0, 0.5}, {0.5, -1.0}, 0.007489396026801584},
    {2.0, 0.3, 0.75, 0.5, {0.0, 0.0}, {0.0, 0.0}, 0.06305307409868659},
    {2.0, 0.3, 0.75, 0.5, {0.5, 0.0}, {0.0, 0.0}, 0.04534055996782561},
    {2.0, 0.3, 0.75, 0.5, {0.5, 0.5}, {-0.5, 0.0}, 0.030612114879815053},
    {2.0, 0.3, 0.75, 0.5, {0.0, 1.0}, {1.0, 0.0}, 0.01046962725585463},
    {2.0, 0.3, 0.75, 0.5, {-1.0, 0.5}, {0.5, -1.0}, 0.007092951037816575},
    {2.0, 0.3, 0.75, 2.0, {0.0, 0.0}, {0.0, 0.0}, 0.057212990482388634},
    {2.0, 0.3, 0.75, 2.0, {0.5, 0.0}, {0.0, 0.0}, 0.03849140228131597},
    {2.0, 0.3, 0.75, 2.0, {0.5, 0.5}, {-0.5, 0.0}, 0.025024663296434598},
    {2.0, 0.3, 0.75, 2.0, {0.0, 1.0}, {1.0, 0.0}, 0.008121373616355381},
    {2.0, 0.3, 0.75, 2.0, {-1.0, 0.5}, {0.5, -1.0}, 0.005141043661289306},
    {0.0, 0.3, 0.0, 0.5, {0.0, 0.0}, {0.0, 0.0}, 0.09907522196685564},
    {0.0, 0.3, 0.0, 0.5, {0.5, 0.0}, {0.0, 0.0}, 0.07715986045076043},
    {0.0, 0.3, 0.0, 0.5, {0.5, 0.5}, {-0.5, 0.0}, 0.050416671105097656},
    {0.0, 0.3, 0.0, 0.5, {0.0, 1.0}, {1.0, 0.0}, 0.013408373226614681},
    {0.0, 0.3, 0.0, 0.5, {-1.0, 0.5}, {0.5, -1.0}, 0.008132589458811814},
    {0.0, 0.3, 0.0, 2.0, {0.0, 0.0}, {0.0, 0.0}, 0.07209790115890383},
    {0.0, 0.3, 0.0, 2.0, {0.5, 0.0}, {0.0, 0.0}, 0.05614990188035905},
    {0.0, 0.3, 0.0, 2.0, {0.5, 0.5}, {-0.5, 0.0}, 0.044547218532265905},
    {0.0, 0.3, 0.0, 2.0, {0.0, 1.0}, {1.0, 0.0}, 0.009757389874105557},
    {0.0, 0.3, 0.0, 2.0, {-1.0, 0.5}, {0.5, -1.0}, 0.005918156117414613},
    {1.0, 0.5, 0.5, 0.5, {0.0, 0.0}, {0.0, 0.0}, 0.08230469258529576},
    {1.0, 0.5, 0.5, 0.5, {0.5, 0.0}, {0.0, 0.0}, 0.06202327309424774},
    {1.0, 0.5, 0.5, 0.5, {0.5, 0.5}, {-0.5, 0.0}, 0.04320078299001376},
    {1.0, 0.5, 0.5, 0.5, {0.0, 1.0}, {1.0, 0.0}, 0.012578999816587421},
    {1.0, 0.5, 0.5, 0.5, {-1.0, 0.5}, {0.5, -1.0}, 0.008389585743676034},
    {1.0, 0.5, 0.5, 2.0, {0.0, 0.0}, {0.0, 0.0}, 0.05350268037489807},
    {1.0, 0.5, 0.5, 2.0, {0.5, 0.0}, {0.0, 0.0}, 0.0396393607164355},
    {1.0, 0.5, 0.5, 2.0, {0.5, 0.5}, {-0.5, 0.0}, 0.032275799476894566},
    {1.0, 0.5, 0.5, 2.0, {0.0, 1.0}, {1.0, 0.0}, 0.009212451958486207},
    {1.0, 0.5, 0.5, 2.0, {-1.0, 0.5}, {0.5, -1.0}, 0.007090406091111024},
};

}  // namespace ndpo::oracle
