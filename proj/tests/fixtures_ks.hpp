// Copyright 2026 The dipmsc Authors.
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

// Frozen two-sample Kolmogorov-Smirnov references (statistic and asymptotic
// p-value) computed with a reference statistics library.

#pragma once

#include <vector>

namespace dipmsc_test {

struct KsFixture {
  std::vector<double> a;
  std::vector<double> b;
  double statistic;
  double p_value;
};

inline const std::vector<KsFixture>& ks_fixtures() {
  static const std::vector<KsFixture> fixtures = {
      {{0.42776966094970703, -0.5708379745483398, 2.654460906982422, -1.6085453033447266, 0.6617155075073242, -0.14342594146728516, -0.3545064926147461, 1.0663585662841797, -1.8179216384887695, -0.9846763610839844, -0.11416053771972656, 1.7412738800048828, 0.08904647827148438, 0.8956880569458008, -1.8633060455322266, -1.2388877868652344, 0.9695291519165039, -0.6281795501708984, -0.06299591064453125, 0.7308692932128906, -2.20501708984375, -1.2011651992797852, -0.0938405990600586, -1.5464763641357422, -0.7105960845947266, -0.04241466522216797, -0.6651210784912109, -0.2687797546386719, 0.04106426239013672, 1.3301963806152344, 1.578653335571289, -0.39456939697265625, -0.8277521133422852, 0.8893442153930664, 0.5105562210083008, 0.24907588958740234, -0.9082393646240234, 0.6449508666992188, 0.8722066879272461, -1.7847919464111328, 1.0174388885498047, -0.0727996826171875, -0.743494987487793, -1.577071189880371, -0.3417797088623047, -0.061145782470703125, -0.37479114532470703, -1.204380989074707, -1.1953372955322266, 0.7054004669189453, 0.047718048095703125, 0.2846088409423828, 0.6290702819824219, 0.717620849609375, 1.735128402709961, -0.07132339477539062, -0.25945472717285156, -0.9582452774047852, 0.2494344711303711, 0.26447105407714844, -0.7597484588623047, -0.032523155212402344, -0.018054962158203125, 3.6644468307495117, -0.5105180740356445, 1.24603271484375, 0.4065876007080078, -0.09175777435302734, 0.40822410583496094, 0.35840511322021484, -0.03180217742919922, -0.24947834014892578, -0.37444591522216797, -0.38555240631103516, 0.2790565490722656, -0.11798572540283203, 0.963953971862793, 1.3795080184936523, -0.05543327331542969, -0.29841136932373047, 1.3199758529663086, -0.0707082748413086, 0.21024608612060547, -0.3850526809692383, 0.1334095001220703, 1.294107437133789, 0.8955039978027344, -1.0923833847045898, -0.8508205413818359, -0.40767669677734375, -0.3026113510131836, 0.7013053894042969, -2.1298904418945312, 1.2893571853637695, -1.149104118347168, 1.0378198623657227, -1.2595691680908203, -0.20534706115722656, 0.8652925491333008, 0.035910606384277344},
       {1.8696794509887695, 3.613828659057617, -0.3236055374145508, -0.91644287109375, -1.1686429977416992, -1.6055736541748047, -0.004479408264160156, -1.7284440994262695, -3.097296714782715, -0.49332714080810547, 2.439176559448242, 0.6921319961547852, -1.3297147750854492, -0.7987203598022461, 1.3924427032470703, 0.6125392913818359, -0.19216442108154297, 1.8010683059692383, 0.7330875396728516, -0.16368961334228516, 0.338592529296875, 0.747889518737793, 2.0032520294189453, -1.0638389587402344, 0.16776084899902344, -0.036009788513183594, -2.263406753540039, -0.5315074920654297, -1.742706298828125, 0.4818754196166992, 0.08377933502197266, 0.7101497650146484, 0.67205810546875, -1.7603683471679688, 0.31415557861328125, 0.9122142791748047, 1.5443639755249023, 0.3565540313720703, -0.4474172592163086, 0.6392879486083984, 2.063143730163574, 0.6349306106567383, -1.8658618927001953, 0.9745473861694336, 0.3858013153076172, 0.3509998321533203, -0.21074867248535156, 0.3818702697753906, 0.4598379135131836, -1.531214714050293, 1.3715057373046875, -0.04993152618408203, 0.16026878356933594, -0.17730998992919922, 2.176915168762207, 1.6618146896362305, 2.242619514465332, -0.07024002075195312, -1.4574909210205078, -0.048610687255859375, 1.7886314392089844, 1.9640874862670898, -0.7847490310668945, 1.9761762619018555, -1.5272350311279297, 0.1941986083984375, 0.4663543701171875, 2.2573719024658203, -2.114558219909668, -1.5967731475830078, -2.674130439758301, -0.993220329284668, -2.3340797424316406, 0.7987661361694336, -1.2301549911499023, -0.6160612106323242, 2.9712352752685547, 0.9056520462036133, -0.4355182647705078, 0.9813060760498047, 1.1003990173339844, 1.8402280807495117, -0.6731996536254883, 0.6310720443725586, 0.2796058654785156, 0.1657247543334961, -0.2687807083129883, 1.376016616821289, 1.2653589248657227, -1.757171630859375, -0.635528564453125, 0.1617574691772461, 1.3414173126220703, 0.6100902557373047, 1.4355230331420898, 0.05246257781982422, -0.37606334686279297, 0.5588083267211914, 2.0567731857299805, -0.5485258102416992},
       0.16000000000000003, 0.13839626223271506},
      {{0.2816162109375, 0.7061681747436523, 0.39597225189208984, 0.21432876586914062, 0.5030393600463867, 0.7937860488891602, 0.1563129425048828, 0.9454717636108398, 0.03353404998779297, 0.7293128967285156, 0.7673606872558594, 0.9326648712158203, 0.619715690612793, 0.5762577056884766, 0.2501335144042969, 0.8860082626342773, 0.7130489349365234, 0.11744403839111328, 0.5649919509887695, 0.5694551467895508, 0.8816127777099609, 0.19745254516601562, 0.3882417678833008, 0.8621454238891602, 0.9660987854003906, 0.1013336181640625, 0.8203773498535156, 0.09363842010498047, 0.3201179504394531, 0.8258180618286133, 0.6259908676147461, 0.10630607604980469, 0.5233230590820312, 0.3289022445678711, 0.004718780517578125, 0.2616910934448242, 0.5007200241088867, 0.4161806106567383, 0.3279151916503906, 0.009701728820800781, 0.4983205795288086, 0.8156747817993164, 0.8141536712646484, 0.0858449935913086, 0.24688243865966797, 0.44269752502441406, 0.4145994186401367, 0.42162036895751953, 0.37130260467529297, 0.7465095520019531, 0.7551803588867188, 0.657496452331543, 0.47478771209716797, 0.7366580963134766, 0.5376358032226562, 0.10773277282714844, 0.016698837280273438, 0.8885707855224609, 0.19690704345703125, 0.06364250183105469},
       {0.7004413604736328, 1.1994905471801758, 0.34006404876708984, 1.0032320022583008, 0.29148006439208984, 0.2795286178588867, 0.5890750885009766, 0.9114580154418945, 1.1122102737426758, 0.21132469177246094, 0.5795764923095703, 0.5087404251098633, 0.46449851989746094, 0.27341270446777344, 1.017287254333496, 1.1937265396118164, 0.29105472564697266, 0.4595775604248047, 1.0224781036376953, 0.22086334228515625, 1.1229915618896484, 0.6465644836425781, 0.5033683776855469, 0.6122837066650391, 0.21408939361572266, 0.5528545379638672, 0.5816926956176758, 0.730341911315918, 0.43518733978271484, 0.2623710632324219, 1.105076789855957, 0.5685710906982422, 0.4804096221923828, 0.7017574310302734, 1.1603155136108398, 1.0275154113769531, 0.6558132171630859, 0.2896881103515625, 0.2573671340942383, 1.1099414825439453, 0.6222133636474609, 0.7279682159423828, 0.3514871597290039, 0.7809934616088867, 1.0286293029785156},
       0.2666666666666667, 0.04021637730721683},
  };
  return fixtures;
}

}  // namespace dipmsc_test
