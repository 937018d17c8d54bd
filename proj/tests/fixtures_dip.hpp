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

// Frozen dip-statistic reference values. Each expected value was computed
// with exact rational arithmetic over the greatest-convex-minorant /
// least-concave-majorant band construction and cross-checked against an
// independent LP solve of the unimodal-fit definition (agreement < 5e-9).

#pragma once

#include <vector>

namespace dipmsc_test {

struct DipFixture {
  std::vector<double> sample;
  double expected_dip;
};

inline const std::vector<DipFixture>& dip_fixtures() {
  static const std::vector<DipFixture> fixtures = {
      {{0.6997184753417969, 0.6481351852416992, 0.9322757720947266, 0.1827106475830078, 0.7795953750610352, 0.21557903289794922, 0.5469160079956055, 0.5192403793334961, 0.8708839416503906, 0.7247381210327148, 0.4775266647338867, 0.9365701675415039, 0.6169233322143555, 0.029425621032714844, 0.9873275756835938, 0.8130264282226562, 0.9329595565795898, 0.9682865142822266}, 0.0493617896128757},
      {{0.3872356414794922, 0.9148483276367188, 0.5144872665405273, 0.6693210601806641, 0.09819984436035156, 0.09379959106445312, 0.6007795333862305, 0.5753650665283203, 0.5362558364868164}, 0.10944493194810072},
      {{0.9445590972900391, 0.38147544860839844, 0.06314849853515625, 0.9473819732666016, 0.7716388702392578, 0.9752321243286133, 0.6608419418334961, 0.4450502395629883, 0.032855987548828125, 0.1170797348022461, 0.14304828643798828, 0.4137563705444336, 0.27538204193115234}, 0.10425888812879401},
      {{0.31644153594970703, 0.9109134674072266, 0.554224967956543, 0.13350296020507812, 0.5885238647460938, 0.5353260040283203, 0.2458486557006836, 0.7076139450073242, 0.5662317276000977, 0.25102996826171875, 0.37388038635253906, 0.7423019409179688, 0.4983491897583008, 0.7083349227905273}, 0.08297445106738865},
      {{0.8710699081420898, 0.9352598190307617, 0.4766092300415039, 0.6032323837280273, 0.4814882278442383, 0.6296787261962891, 0.1307830810546875, 0.9148597717285156, 0.1943492889404297, 0.07114315032958984, 0.5153083801269531, 0.2132730484008789, 0.41275978088378906, 0.9577484130859375, 0.016841888427734375, 0.44533443450927734, 0.6404800415039062, 0.9987144470214844}, 0.08940059880664615},
      {{0.7908868789672852, 0.7853994369506836, 0.8255701065063477, 0.26114559173583984, 0.38416290283203125, 0.8214225769042969, 0.44586944580078125}, 0.13878091184083324},
      {{0.7205629348754883, 0.04065227508544922, 0.04353904724121094, 0.28055477142333984, 0.3961305618286133, 0.4544486999511719, 0.022876739501953125, 0.12093830108642578}, 0.09221346340263818},
      {{0.984501838684082, 0.24503612518310547, 0.7348604202270508, 0.16129207611083984, 0.11605262756347656, 0.48046302795410156, 0.3572044372558594, 0.6342563629150391, 0.5775775909423828, 0.13003158569335938, 0.023838043212890625, 0.2547149658203125, 0.3662300109863281, 0.4562568664550781, 0.43575000762939453, 0.5014352798461914, 0.7812099456787109, 0.5437841415405273, 0.07299518585205078}, 0.05693885065834729},
      {{0.5208272933959961, 0.22066974639892578, 0.30609893798828125, 0.27997589111328125}, 0.125},
      {{0.6959724426269531, 0.40097713470458984, 0.22263240814208984, 0.9739866256713867, 0.6187820434570312, 0.6278257369995117, 0.011000633239746094, 0.5196075439453125, 0.8927745819091797, 0.8154315948486328, 0.10379981994628906, 0.38102245330810547, 0.7399473190307617, 0.4411439895629883, 0.4246692657470703, 0.9404029846191406, 0.07297992706298828}, 0.058835373584147636},
      {{-0.8190202713012695, 2.4706430435180664, -3.7518539428710938, -0.6069555282592773, -4.3440961837768555, 0.5851469039916992, -0.03060436248779297, 2.693669319152832, 3.152984619140625, -4.804863929748535, 4.691989898681641, 4.770949363708496, 2.115711212158203, -0.4460897445678711, 3.467789649963379, 1.040374755859375, -3.9331254959106445, 2.464022636413574, -2.5950450897216797, -2.4307308197021484, -3.0116748809814453, -3.419447898864746, -3.8599014282226562, 4.632547378540039, -4.336462020874023, -4.956340789794922, -4.405438423156738, -4.8387651443481445, -0.23772144317626953, -1.8321781158447266}, 0.050484401292955304},
      {{-0.8697795867919922, 2.157808303833008, -3.9038572311401367, 3.239712715148926, 4.400425910949707, -4.410039901733398, 3.9313507080078125, -3.09360408782959, -2.428445816040039, 0.6623029708862305, -2.4676637649536133, -3.648914337158203, 1.5369892120361328, 4.875823020935059, -0.8257884979248047, -3.991116523742676, 3.2559118270874023, 3.176738739013672, -0.4646749496459961, -4.116544723510742, 3.1947546005249023, -3.5021133422851562, 4.569414138793945, 1.76513671875, 1.9731807708740234, 0.27224254608154297}, 0.08133034147006972},
      {{0.5211887359619141, 3.2687740325927734, 4.436878204345703, 4.809074401855469, -0.8028621673583984, -4.307182312011719, 4.917448043823242, 0.5602321624755859, -1.1328210830688477, 1.0879802703857422, -3.645535469055176, -1.760371208190918, -2.8216676712036133, -1.4343957901000977, -1.808711051940918, -0.07647037506103516, -4.101541519165039, 4.029157638549805, 3.553274154663086, -0.9710493087768555, -3.719928741455078, -2.6008520126342773, 3.5820388793945312, -0.9165258407592773, -1.773087501525879, 0.6259288787841797, 0.08031368255615234, -0.10377025604248047, -2.8351621627807617, 0.04945182800292969}, 0.06643898159659133},
      {{1.6874408721923828, 1.8281469345092773, 3.4979772567749023, 4.474403381347656, -3.7280263900756836, 0.7346735000610352, -3.145017623901367, 3.284123420715332, 4.547178268432617, 1.9985637664794922, -1.276285171508789, 2.0127315521240234, 3.1403207778930664, -4.108482360839844, -3.842508316040039, -3.1163530349731445, -2.4283876419067383, 0.5279884338378906, -3.716355323791504, 1.7852935791015625, 4.566919326782227, 0.5347862243652344, -1.3516454696655273}, 0.08856840018016272},
      {{-0.09812068939208984, -3.294487953186035, -1.871994972229004, 3.717803955078125, 0.7953567504882812, -2.7930288314819336, 2.5561304092407227, 2.712533950805664, 2.0927982330322266, 4.040942192077637, -2.4729747772216797, -3.0995302200317383, -4.727962493896484, -4.386833190917969, 0.6948585510253906, 3.7538347244262695, -1.2704029083251953, -0.5759086608886719, 1.4459400177001953, -1.459425926208496, -0.7403774261474609, -4.965690612792969, 2.0039548873901367}, 0.04948250865301597},
      {{-0.85162353515625, 3.691971778869629, 0.6927118301391602, -1.6955242156982422, -4.019242286682129, 0.2948131561279297, 0.16713619232177734, -4.505478858947754, -4.605934143066406, -4.36020565032959, -1.3414134979248047, 4.361023902893066, -3.330526351928711, 3.362898826599121, -0.5037202835083008, 0.865605354309082, 1.9709272384643555, 4.317708969116211, -3.8738174438476562, -0.1838998794555664, -3.677332878112793, 0.20950889587402344, 4.604283332824707, 4.422372817993164, 3.4915294647216797, -0.9059267044067383, 3.0400381088256836, 3.1574277877807617, -0.48552799224853516, -3.648463249206543, -0.4334745407104492, 1.7001724243164062}, 0.07113998196785917},
      {{0.4463634490966797, 3.9466428756713867, 3.772078514099121, -0.8323202133178711, 4.214111328125, 1.825291633605957, -0.556605339050293, 3.0720338821411133, -3.653571128845215, 3.4351043701171875, -0.2516622543334961, 3.144036293029785, -2.2263307571411133, -3.5865468978881836, 3.8369760513305664, -1.732039451599121, 1.3227615356445312, 4.375614166259766, 2.8227834701538086, 1.8740053176879883}, 0.04805633722414745},
      {{-1.6646146774291992, -2.415048599243164, -1.2870674133300781, -4.865602493286133, 1.5339241027832031, 2.541250228881836, -2.882902145385742, 0.6293306350708008, -0.38695621490478516, -4.475488662719727, -4.68480110168457, -1.2064008712768555, -4.929040908813477, 1.2083702087402344, -3.877706527709961, 1.593104362487793, 3.7639570236206055, -4.682220458984375, -2.6492996215820312, 2.7109012603759766, -3.9624862670898438, 0.44507503509521484, 3.2793731689453125, 4.607019424438477, -3.983181953430176, 2.85819149017334, -2.822983741760254, -4.399296760559082, -1.010183334350586, -0.20098114013671875, -2.212207794189453, -3.732524871826172}, 0.04388802590011427},
      {{-1.0157365798950195, 0.6114721298217773, -0.8203344345092773, 1.4887819290161133, -0.6698160171508789, -0.35248565673828125, 1.381850242614746, 0.5196943283081055, 2.6909971237182617, 1.1915273666381836, -0.23891353607177734, 0.25716400146484375, -0.9793500900268555, -0.603266716003418, -0.5405826568603516, -0.49523448944091797, -2.152242660522461, 0.11574268341064453, 0.23955631256103516, 0.5159225463867188, -0.31031036376953125, -0.89166259765625, 0.1363992691040039, -0.551121711730957, -0.48815155029296875}, 0.058387473729777255},
      {{0.0986185073852539, 0.44766902923583984, -0.5934839248657227, 1.2388124465942383, -1.7845535278320312, -0.015691757202148438, -0.5229387283325195, -1.1107902526855469, -0.47064971923828125, -0.905120849609375, 0.7528457641601562, 0.7791872024536133, -0.9343233108520508, -0.7920074462890625, 1.753697395324707, -1.6808700561523438, 0.031103134155273438, 1.9730281829833984, -1.074533462524414, 0.9780035018920898, 0.5232582092285156, -0.03193092346191406, -0.6992626190185547, 0.9284582138061523, 0.5950222015380859, 0.8552436828613281, 0.6612730026245117, -2.1773786544799805, 0.31055545806884766}, 0.06310095549343954},
      {{1.8735475540161133, -1.308100700378418, -0.7793674468994141, -1.1103200912475586, 0.13706398010253906, 1.4790325164794922, -1.470412254333496, 1.651066780090332, 0.056305885314941406, 1.880035400390625, 0.6469860076904297, 0.35607147216796875, -2.246884346008301, 0.5905075073242188, 0.8941183090209961, 0.9643182754516602, 1.0846796035766602, -0.6998434066772461, -0.9267463684082031, -0.1318807601928711, -1.206557273864746, 1.697662353515625, 0.6298761367797852, -1.0690078735351562, -0.838165283203125, -2.2295618057250977, -0.46948719024658203, 1.4594841003417969, -0.015766143798828125, -0.1743612289428711, -1.189070701599121, 0.061392784118652344, -0.2756013870239258, -2.2870187759399414, -1.2257633209228516, -1.5606412887573242, 0.6520328521728516}, 0.046058864807475966},
      {{1.2562637329101562, 1.3489761352539062, 0.07321548461914062, 0.6236286163330078, 1.8329973220825195, -0.3666648864746094, -0.39519405364990234, 0.11072635650634766, -0.1947469711303711, -0.47405338287353516, -0.03144359588623047, 0.0031385421752929688, 0.3073577880859375, 0.4212684631347656, 0.4358501434326172, -1.1313056945800781, 0.63134765625, 0.3279247283935547, -1.0313453674316406}, 0.061091974261624694},
      {{-0.24230670928955078, -0.6261405944824219, 1.779806137084961, -0.9138011932373047, -0.12578678131103516, 0.43227672576904297, -2.062138557434082, -0.5638761520385742, 1.129507064819336, -1.549635887145996, 1.1873588562011719, -0.22030162811279297, 0.02734661102294922, 0.8388032913208008, -0.6752099990844727, -0.466766357421875, -0.3882637023925781, 0.5174503326416016, 0.060341835021972656, -0.23273658752441406, -0.07848930358886719, -0.05286884307861328, 0.13406658172607422, 0.43743228912353516, 0.025862693786621094, 0.5442419052124023, -0.15711688995361328, 0.15450000762939453, 0.6910266876220703, 0.5589513778686523, 1.2918033599853516}, 0.05538700047873901},
      {{-0.16080474853515625, 0.4042367935180664, -1.5150089263916016, -1.3248672485351562, -0.039951324462890625, 2.2393932342529297, -1.0540552139282227, -1.2795915603637695, 0.45485782623291016, 0.583552360534668}, 0.1319225682506729},
      {{-0.35602569580078125, -1.0516672134399414, 0.04202842712402344, -1.5441999435424805, -0.32706451416015625, -2.270350456237793, 0.04111480712890625, -0.9477758407592773, 0.06604957580566406, -0.9222431182861328, 0.8060169219970703, -0.7801599502563477, -2.5319108963012695}, 0.09651036217516562},
      {{-1.5747098922729492, 0.6428127288818359, 1.7552490234375, -1.1424903869628906, 1.718709945678711, 0.21663856506347656, 1.5914583206176758, -0.5218038558959961, 0.40233325958251953, 0.43004798889160156, -1.1097526550292969, -0.38994407653808594, 0.6658926010131836, 0.3078794479370117, 1.0133981704711914, 1.8955106735229492, -0.5454206466674805, -1.8456687927246094, -0.684046745300293, 0.5392589569091797, 0.5367155075073242, 0.37601470947265625, -0.8891534805297852, -1.3608055114746094, 0.5390653610229492, 0.2347726821899414}, 0.06007918194845887},
      {{-3.2655029296875, -2.8970890045166016, -2.971221923828125, -3.023707389831543, -3.4491472244262695, -2.9521284103393555, -2.915119171142578, -2.816054344177246, -2.975832939147949, -2.6977338790893555, -2.856442451477051, 2.7114334106445312, 3.186891555786133, 3.056471824645996, 3.095439910888672, 3.626908302307129, 3.2117748260498047, 3.3984928131103516}, 0.16629913572867655},
      {{-2.596527099609375, -3.4686717987060547, -3.1952266693115234, -3.029508590698242, -3.0699281692504883, -3.0332469940185547, 2.834951400756836, 3.01284122467041, 3.0634708404541016, 3.3037290573120117, 3.1633472442626953, 2.6186752319335938, 2.919217109680176, 3.0602283477783203, 2.977341651916504, 3.0611629486083984, 3.160273551940918, 2.843606948852539, 3.3976802825927734, 3.027235984802246, 2.458449363708496, 2.9671401977539062, 2.3249406814575195}, 0.11079970956584176},
      {{-2.9235944747924805, -3.2130842208862305, -3.2021751403808594, -2.449093818664551, -2.7740278244018555, -3.2356443405151367, -3.3340673446655273, -3.5916366577148438, -2.906963348388672, -2.5117645263671875, 2.2462081909179688, 2.826413154602051, 2.9258060455322266, 2.438112258911133, 3.358743667602539, 3.009031295776367, 3.217911720275879, 3.1108293533325195, 2.4499073028564453, 2.8321304321289062, 3.085333824157715, 3.2917041778564453}, 0.18279247235165008},
      {{-3.2930984497070312, -3.1717748641967773, -3.128070831298828, -2.769134521484375, -2.819890022277832, -2.9577560424804688, -2.9127025604248047, -2.886716842651367, -3.169239044189453, -3.030874252319336, -2.8296756744384766, 2.506077766418457, 2.527947425842285, 3.3460254669189453, 2.382413864135742, 2.242550849914551, 2.738994598388672, 3.4544925689697266, 3.1082258224487305, 2.8874082565307617, 2.7310314178466797, 3.448824882507324}, 0.20131690485946405},
      {{-2.9528350830078125, -2.9507980346679688, -3.089204788208008, -2.861043930053711, -3.2226905822753906, -2.51369571685791, -2.876591682434082, -3.669489860534668, -2.9249019622802734, -2.2217397689819336, 2.212660789489746, 2.716817855834961, 3.3099136352539062, 2.7776269912719727, 1.530867576599121, 2.245213508605957}, 0.12719775189777047},
      {{-2.8275060653686523, -3.1129846572875977, -2.8612356185913086, -2.79833984375, -2.671114921569824, -2.8937463760375977, -3.139418601989746, -2.730807304382324, -3.130171775817871, -2.8888683319091797, 2.1579837799072266, 3.28305721282959, 2.6241331100463867, 3.0772085189819336, 2.801473617553711, 3.3748979568481445, 3.414454460144043, 2.9076642990112305, 2.3277225494384766, 3.099071502685547, 3.032642364501953, 2.9627227783203125}, 0.2071812471532242},
      {{-2.5740966796875, -3.23117733001709, -2.9438953399658203, -3.155588150024414, -3.0334320068359375, -2.7024145126342773, -3.9254684448242188, -3.0857534408569336, -2.5839929580688477, -3.083486557006836, -2.711275100708008, -2.8854875564575195, -2.7807254791259766, -2.5710086822509766, -2.749910354614258, -2.574739456176758, -3.158353805541992, -2.791171073913574, 2.7434797286987305, 2.6164369583129883, 3.792374610900879, 2.7907142639160156, 2.9181337356567383, 2.956719398498535, 2.7632875442504883, 2.7851648330688477, 2.809904098510742}, 0.13902826876472046},
      {{-2.7560129165649414, -2.966064453125, -2.5456771850585938, -2.7806482315063477, -3.3813323974609375, -2.6364927291870117, -3.1721620559692383, -3.0076780319213867, -2.7901744842529297, -2.325375556945801, -3.4103755950927734, -2.6649293899536133, -3.2296857833862305, -3.3001909255981445, -3.2310123443603516, -3.2549924850463867, -3.074033737182617, -3.055476188659668, -3.1796092987060547, 3.4909725189208984, 2.7103700637817383, 2.7055959701538086, 3.020480155944824, 2.7324609756469727, 3.9862890243530273, 2.78530216217041, 2.8377065658569336, 3.2624969482421875, 2.9324493408203125, 3.6380386352539062, 2.0505056381225586, 2.584101676940918, 3.0172529220581055, 3.0147666931152344}, 0.1568768919358758},
      {{-5.588688850402832, -5.783536911010742, -5.6781415939331055, -5.849637985229492, -6.1168928146362305, -5.7901153564453125, -6.055370330810547, -6.194606781005859, -5.539407730102539, -5.94597053527832, -5.940823554992676, -6.102597236633301, 0.15913009643554688, 0.48828792572021484, -0.20720672607421875, 0.4704399108886719, 0.08699417114257812, -0.20978069305419922, -0.3165264129638672, -0.13045787811279297, -0.4983243942260742, 6.681427001953125, 6.630297660827637, 7.431157112121582, 6.507625579833984, 7.133622169494629, 7.255716323852539, 7.073357582092285, 6.952607154846191, 7.309813499450684}, 0.1300471928645191},
      {{-6.115976333618164, -5.963330268859863, -5.825953483581543, -5.915077209472656, -5.9561967849731445, -6.009821891784668, -5.849815368652344, -5.936182975769043, -6.132436752319336, -6.556985855102539, -5.873373031616211, -6.1443681716918945, -6.024684906005859, -0.5703086853027344, 0.19817638397216797, 0.8776493072509766, -0.18985557556152344, 1.0159425735473633, 6.4787139892578125, 7.052711486816406, 7.120802879333496, 6.791242599487305, 6.6493024826049805}, 0.09791422264762416},
      {{-5.939186096191406, -5.677207946777344, -6.230579376220703, -6.255923271179199, -0.11751365661621094, 0.41982269287109375, 0.07010650634765625, 0.22963619232177734, -0.1760263442993164, 0.920928955078125, -0.23326492309570312, -0.26561450958251953, 6.771203994750977, 7.47039794921875, 7.273630142211914, 6.956234931945801, 6.464224815368652, 6.72452449798584}, 0.14106222110651886},
      {{-5.872478485107422, -6.113864898681641, -6.073688507080078, -5.9598236083984375, -6.122067451477051, -0.21882343292236328, -0.08385753631591797, -0.272186279296875, 0.6568899154663086, 0.8272418975830078, -0.03700733184814453, -0.020275115966796875, 0.5992555618286133, -0.15407562255859375, -0.45523643493652344, 0.3019399642944336, 0.11528301239013672, -0.5785331726074219, 7.131596565246582, 7.334901809692383, 7.139081954956055, 6.920233726501465, 6.656638145446777, 6.709600448608398, 7.255649566650391}, 0.12540843955018452},
      {{-6.043285369873047, -6.412100791931152, -6.073657989501953, -6.159502983093262, -5.730342864990234, -6.049081802368164, -6.265993118286133, -5.909777641296387, -6.237612724304199, -6.335680961608887, -5.727260589599609, 0.8484649658203125, -0.35915184020996094, 0.40032291412353516, 0.37421512603759766, -0.8427133560180664, 0.38989830017089844, 0.28164005279541016, 0.11857318878173828, -0.6334514617919922, -0.7217826843261719, 0.41887760162353516, -0.5066900253295898, -0.29340457916259766, 6.924422264099121, 6.296943664550781, 6.6906890869140625, 6.672935485839844}, 0.1722747153449743},
      {{-6.28060245513916, -5.8224945068359375, -5.750674247741699, -5.672728538513184, -6.183699607849121, -6.085666656494141, -5.627277374267578, -6.016853332519531, -5.582489967346191, 0.10276412963867188, -0.13576030731201172, 0.33630943298339844, 0.2703828811645508, 0.39367103576660156, -0.0875701904296875, 0.501276969909668, 7.51346492767334, 7.096149444580078, 6.756194114685059, 6.992130279541016, 6.340392112731934, 6.788064956665039, 7.66326904296875, 7.333657264709473, 6.222338676452637, 7.345658302307129, 6.799019813537598}, 0.15012270774098666},
      {{4.0, 1.0, 2.0, 0.0, 4.0, 1.0, 5.0, 3.0, 4.0, 4.0, 5.0, 4.0, 0.0, 4.0, 1.0, 2.0, 0.0, 5.0, 4.0}, 0.09868421052631579},
      {{3.0, 4.0, 3.0, 2.0, 2.0, 1.0, 5.0, 4.0, 0.0, 1.0, 5.0, 3.0, 4.0, 4.0, 2.0, 3.0, 1.0, 1.0, 0.0, 5.0, 1.0, 3.0, 2.0, 3.0}, 0.10416666666666667},
      {{5.0, 5.0, 5.0, 0.0, 5.0, 3.0, 1.0, 0.0, 4.0, 5.0, 1.0, 1.0}, 0.15},
      {{5.0, 2.0, 2.0, 4.0, 0.0, 2.0, 0.0, 5.0, 5.0, 2.0, 4.0, 4.0, 4.0, 4.0, 5.0, 1.0, 3.0, 2.0, 0.0, 3.0, 2.0, 4.0, 5.0}, 0.13043478260869565},
      {{5.0, 2.0, 3.0, 5.0, 4.0, 2.0, 0.0, 0.0, 2.0, 0.0, 1.0, 4.0, 5.0, 3.0, 4.0, 5.0, 5.0, 0.0, 0.0, 0.0, 3.0, 5.0}, 0.13636363636363635},
      {{0.6757469177246094, 0.22393417358398438, 1.1486530303955078, 0.15303325653076172, 0.3286619186401367, 0.3226604461669922, 0.8024196624755859, 1.3307876586914062, 2.330812454223633, 11.654332160949707, 8.211848258972168, 1.6755447387695312, 0.19629859924316406, 1.7084274291992188, 0.6718378067016602, 1.4620637893676758, 0.2951469421386719, 5.239960670471191, 0.1582355499267578, 0.9999475479125977, 9.043057441711426, 1.4209051132202148, 0.9629364013671875, 0.5570907592773438, 1.7510366439819336, 2.0191450119018555}, 0.044423669008809286},
      {{0.06001567840576172, 7.063300132751465, 0.5069398880004883, 1.3715629577636719, 4.3604278564453125, 1.3734683990478516, 2.7953310012817383, 1.8861455917358398, 2.27923583984375, 2.6956071853637695, 2.1709957122802734, 0.7896566390991211, 0.0677947998046875, 1.7105951309204102, 1.3509368896484375, 4.099550247192383, 1.323063850402832, 0.12368011474609375, 0.5012969970703125, 1.6143741607666016}, 0.0719231396509519},
      {{0.28025054931640625, 0.15215492248535156, 3.8702402114868164, 9.27242660522461, 0.9653825759887695, 2.043421745300293, 3.3824644088745117, 0.6784801483154297, 2.1022396087646484, 0.8313026428222656, 0.9184637069702148, 1.5035133361816406, 0.5780029296875, 0.48673439025878906, 0.6744060516357422, 0.9457178115844727, 0.21675682067871094, 2.3842220306396484, 5.091038703918457, 1.0298900604248047, 1.0480937957763672, 0.9611902236938477, 0.4666919708251953, 2.17635440826416, 2.636077880859375, 0.4279613494873047, 1.170241355895996, 1.9781389236450195, 2.959305763244629, 6.898119926452637, 3.156036376953125, 2.657099723815918, 0.5221548080444336, 4.862910270690918, 0.2229757308959961, 0.032311439514160156, 3.235018730163574}, 0.04570764694557418},
      {{0.7819719314575195, 2.7827987670898438, 1.5911312103271484, 1.194382667541504, 0.36176395416259766, 0.06940746307373047, 1.0850725173950195, 0.4453697204589844, 2.9371519088745117, 2.3731698989868164, 0.7201166152954102, 2.7205018997192383, 4.445581436157227, 0.30446338653564453, 2.2336339950561523, 0.7132358551025391, 0.7128057479858398, 5.399909973144531, 1.1130237579345703, 4.374249458312988, 0.9072017669677734, 1.970667839050293, 0.20319557189941406}, 0.04726636405999239},
      {{0.16007423400878906, 2.1029491424560547, 0.2078542709350586, 0.15710926055908203, 0.3461322784423828, 0.25512218475341797, 3.746776580810547, 0.36399269104003906, 0.4682779312133789, 1.1075859069824219, 6.309540748596191, 0.22765445709228516, 1.3510732650756836, 7.567010879516602, 1.8170528411865234, 2.699817657470703, 1.169698715209961, 1.5130882263183594, 0.14598846435546875, 0.3631572723388672, 2.503387451171875, 5.449871063232422, 0.5969028472900391, 2.214432716369629, 0.16190624237060547, 2.699787139892578, 0.2675819396972656, 1.4816265106201172}, 0.04976798670003554},
  };
  return fixtures;
}

}  // namespace dipmsc_test
