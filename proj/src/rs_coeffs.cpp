// Generated by scripts/gen_rs_coeffs.py -- do not edit by hand.
//
// Chebyshev tables (on p in [-1,1]) for the Riemann-Siegel correction
// coefficients C_0..C_20, plus a double-double log(n) table used for
// phase reduction in the main sum.

#include "zetalab/rs_coeffs.hpp"

namespace zetalab::detail {

const double kRsCheb[21][41] = {
  {  // C_0
    6.42667286239768432e-01, -3.63513037521537736e-61, 2.71972999997855069e-01, 1.65247605237601224e-61,
    1.07386058193402849e-02, -6.48709714326550397e-62, -1.37438152963366140e-03, 1.78072889604420789e-62,
    -1.24682218803206764e-04, -3.79480283131738617e-63, -5.76459970678304790e-07, 5.67856697868302661e-64,
    2.72806742958045197e-07, -5.03451443794175679e-65, 8.07795305950047079e-09, 1.13197434792535420e-66,
    -2.08846080688696536e-10, 2.96988445860679638e-67, -1.31155618547395278e-11, -6.44057415267457280e-69,
    -1.42079872280871855e-14, -1.75589780848069647e-68, 1.02717013579311616e-14, 6.05248487515916748e-69,
    1.39745988195183732e-16, -1.26258386871176764e-69, -4.48411873395228848e-18, 1.87888394019199967e-70,
    -1.18305995738452886e-19, -1.93940517716771163e-71, 9.38986956039993526e-22, 1.04653580251656034e-72,
    5.60182284732070035e-23, 4.88079801300279410e-74, 1.00235438741068839e-25, -1.55277443210364536e-74,
    -1.75929861177345442e-26, 1.23588960495830959e-75, -1.48486518795941342e-28, -8.37525354816434255e-78,
    3.80876080108483138e-30,
  },
  {  // C_1
    5.43063811010542472e-57, -1.06979139210030012e-02, -4.21239293593913986e-57, -1.71706512433778824e-02,
    -7.61763522194869188e-58, -2.79321114978847099e-03, 2.52512323630424473e-58, 3.63756537192750452e-05,
    -1.49500857610416640e-59, 2.71089552311508878e-05, -3.14121081155730915e-60, 1.04837498667527742e-06,
    9.63089211898667139e-61, -5.88646716652757198e-08, -1.89759334873890155e-61, -4.32296726850277916e-09,
    3.40345300959432281e-62, 1.13695915882737119e-11, -5.55227957892929118e-63, 6.69983391035532744e-12,
    8.07849919437922396e-64, 1.00799976528084746e-13, -1.01862286296538460e-64, -5.15248800922211668e-15,
    1.01884601476951314e-65, -1.52169544718369704e-16, -5.83535362689281060e-67, 1.86194648336871027e-18,
    -3.73909265668576716e-68, 1.13018461842462654e-19, 1.51697046030028758e-68, 9.65030647685710867e-23,
    -2.06453598583470096e-69, -5.22661068542535168e-23, 1.39122413305917726e-70, -4.63004905187642861e-25,
    1.14098110327990096e-72, 1.60180135513795212e-26, -1.12731929154348946e-72, 2.62676505017355643e-28,
    8.29711652298253115e-74,
  },
  {  // C_2
    3.14611585398891225e-03, -7.84932033489297295e-53, -2.30878388453075031e-03, 3.56669814516669332e-53,
    5.76982076668984434e-05, -1.40183695544896203e-53, 3.52388620236658990e-04, 3.84880343418111695e-54,
    2.52466674586844343e-05, -8.19984961280709400e-55, -3.44282119719313581e-06, 1.22670919635523170e-55,
    -3.53507455662245907e-07, -1.08720199616943066e-56, 3.73083018379262518e-09, 2.43564638957565876e-58,
    1.27769518641166354e-09, 6.43453932098566055e-59, 2.18746162041470573e-11, -1.42164554331730687e-60,
    -1.91414109646103699e-12, -3.78910733897099867e-60, -6.56288310216852271e-14, 1.30704857590992556e-60,
    1.25860091824117152e-15, -2.72718392570764732e-61, 8.14007662388146293e-17, 4.05890487045276503e-62,
    -5.42387427548860780e-20, -4.19019168709015681e-63, -5.79698013108654267e-20, 2.26184774401380602e-64,
    -5.38291650374657577e-22, 1.05327621691146488e-65, 2.60100807725371234e-23, -3.35385887987883772e-66,
    4.66696751637945344e-25, 2.67011631850729280e-67, -7.28787575057931660e-27, -1.81547648771985647e-69,
    -2.25009679072319297e-28,
  },
  {  // C_3
    2.58359977995373132e-49, -7.12325622120387359e-05, -2.00837375707111918e-49, -2.32343052981648075e-04,
    -3.61952210717529289e-50, 1.29299120454724737e-04, 1.19856986186229730e-50, -1.80744964136714404e-05,
    -6.99432116017079274e-52, -6.52618518722043951e-06, -1.52561052226009425e-52, 1.16963653785219857e-07,
    4.63468802945483147e-53, 7.34947612651812572e-08, -9.08394780868650484e-54, 1.77509100779070716e-09,
    1.62254694635737300e-54, -2.55555296132652492e-10, -2.64221291186763279e-55, -1.13766366005372998e-11,
    3.84604439355368865e-56, 3.34986389853027691e-13, -4.86269063553401123e-57, 2.55373793541638928e-14,
    4.89678572452981277e-58, -6.76650077132187091e-17, -2.87723884279831532e-59, -2.97688847199197288e-17,
    -1.62818947190806762e-60, -2.99522080875669150e-19, 7.05959753577972716e-61, 2.04611884975751029e-20,
    -9.73504925689372396e-62, 4.08692645332599454e-22, 6.65732691000525309e-63, -8.44761215014502852e-24,
    4.13806202852671904e-65, -2.83026730519266206e-25, -5.25860585631536242e-65, 1.84431071832699705e-27,
    3.94474074001661831e-66,
  },
  {  // C_4
    1.67657452466968607e-04, -1.23543928073412611e-45, -2.27287689434167261e-04, 5.61006102536344659e-46,
    6.47738718844569642e-05, -2.20900913159312273e-46, -8.49220050012540947e-06, 6.06669863929978077e-47,
    -2.61614072452190756e-06, -1.29199856850340418e-47, 8.33676496873321494e-07, 1.93206687845547938e-48,
    6.32470403754483299e-08, -1.71142921880422197e-49, -1.00599494030010716e-08, 3.81269394257046824e-51,
    -7.82267720413033309e-10, 1.01798373837325556e-51, 3.16765828534986032e-11, -2.31192692606675416e-53,
    3.50069447020528944e-12, -5.95811164489764294e-53, -1.43148145114437483e-14, 2.05755837959036312e-53,
    -7.26940270792176375e-15, -4.29458375550756724e-54, -8.78055659483595707e-17, 6.39290661757815629e-55,
    8.15025447495458025e-18, -6.60097946432664793e-56, 1.92083970582208608e-19, 3.56495520489752685e-57,
    -5.17565521395274335e-21, 1.65631624716753605e-58, -1.97677367226883303e-22, -5.28110737212306995e-59,
    1.60598630334685068e-24, 4.20611374740565567e-60, 1.26530954514181193e-25, -2.87397241411709440e-62,
    1.63261898250478565e-28,
  },
  {  // C_5
    1.61177577846525078e-42, -8.82884523480890186e-05, -1.25695407480042173e-42, 1.56286849693283887e-05,
    -2.25383381691968878e-43, 1.83424476971600837e-07, 7.45174794529151974e-44, -2.10972678749375432e-06,
    -4.25368167813418562e-45, 6.65701617409638767e-07, -9.80713683583899699e-46, -2.77147412050684307e-08,
    2.94039076790124788e-46, -1.81112493757648746e-08, -5.71920239688370358e-47, 5.76589081171597741e-10,
    1.01534945440923299e-47, 1.86750334260831528e-10, -1.64902372453161223e-48, 1.10516089170930213e-13,
    2.40187902910565447e-49, -7.87064336805682406e-13, -3.04901373727277050e-50, -1.44583509956551207e-14,
    3.10094366815888993e-51, 1.58145919086095294e-15, -1.88878673459572143e-52, 4.91063883036378986e-17,
    -8.75895335265409719e-54, -1.64442012206667878e-18, 4.25807591947120674e-54, -7.77801791752324557e-20,
    -5.99250835826427080e-55, 7.93222687962653030e-22, 4.18898423369283959e-56, 7.31265713634406072e-23,
    1.38432921027503464e-58, 8.51760797288304393e-26, -3.18351047714336105e-58, -4.54476360792758266e-26,
    2.45850315651298710e-59,
  },
  {  // C_6
    1.21897421410689712e-05, -3.41584590292926796e-39, -1.38297601405037872e-05, 1.54953380745985006e-39,
    5.11096730499826035e-06, -6.11812695818363330e-40, -2.04581364503860756e-06, 1.68098693346968543e-40,
    4.93813664483201224e-07, -3.57786137742681977e-41, -3.61875283496228161e-08, 5.34716408518020212e-42,
    -1.28769050980798603e-08, -4.73278279447950495e-43, 2.57441211114486604e-09, 1.04563745946658779e-44,
    1.36414570707916845e-10, 2.83577720090546956e-45, -3.03243957408438193e-11, -6.69247201734241563e-47,
    -1.32166712399025372e-12, -1.64504387521760391e-46, 1.30316521300093677e-13, 5.69028805743846913e-47,
    6.63588355320067002e-15, -1.18827088782727583e-47, -2.46003565479328011e-16, 1.76934397725354949e-48,
    -1.68152792081688339e-17, -1.82744408983844479e-49, 1.89379320803594105e-19, 9.87639166233054649e-51,
    2.43065061273736335e-20, 4.57374646388604192e-52, 4.60848612693427630e-23, -1.46110766877636472e-52,
    -2.19569028078367824e-23, 1.16434065079904472e-53, -2.29353316810732550e-25, -8.01095336915332760e-56,
    1.30659906338240794e-26,
  },
  {  // C_7
    2.10561613280866079e-36, -1.27686577974382188e-05, -1.64971471926484373e-36, 3.86293383464159910e-06,
    -2.93645508915417107e-37, -1.36938309364678795e-06, 9.68646388648358823e-38, 2.76470416827934909e-07,
    -5.34872524460066644e-39, -1.02834368233452095e-08, -1.33613496485296125e-39, -1.17550665681690873e-08,
    3.93430013586079970e-40, 3.05504891584699525e-09, -7.57045371417677301e-41, -1.14304418993469726e-10,
    1.33236278982491236e-41, -5.13081867536019744e-11, -2.15554845081296661e-42, 2.83550991025145112e-12,
    3.14256093396245706e-43, 4.26665416164993104e-13, -4.01241970482080833e-44, -1.27635730085173749e-14,
    4.13838183166499688e-45, -1.85690800324622810e-15, -2.64533838958402848e-46, 1.53642870789776348e-17,
    -8.79130722141355152e-48, 4.41155903885380283e-18, 5.28577767602749232e-48, 2.25423488896371736e-20,
    -7.67547149333429630e-49, -6.17426930063417527e-21, 5.54023130167761375e-50, -8.81463936410376190e-23,
    -4.60478525004427306e-53, 5.39965289557188796e-24, -3.97487126138045213e-52, 1.18383077768119896e-25,
    3.20710619406973036e-53,
  },
  {  // C_8
    1.22855850880910792e-06, -2.22674053720191869e-33, -1.19409863960772429e-06, 1.00854552395546998e-33,
    -6.09999965391951700e-08, -3.99808833721962393e-34, -8.84406391388595390e-09, 1.09921371365468498e-34,
    3.16981631719440216e-08, -2.33765281954240174e-35, -1.42004720958833981e-08, 3.49060331517765550e-36,
    3.16141059154714795e-09, -3.08596498573638656e-37, -2.44363152621160819e-10, 6.73541541633892314e-39,
    -4.32263123656343739e-11, 1.86847693517141273e-39, 9.01768190773949550e-12, -4.64329148664607860e-41,
    1.46989079200089213e-13, -1.07023861023081436e-40, -8.70330538247097569e-14, 3.71072091766763701e-41,
    -8.37977080337318199e-16, -7.75427427910826736e-42, 3.88745506866593727e-16, 1.15506468330711749e-42,
    6.24068507247011053e-18, -1.19346021509418799e-43, -9.22917087555887091e-19, 6.45638735542639033e-45,
    -2.15924263985166050e-20, 2.97643255728902018e-46, 1.26473481274047239e-21, -9.53361452932915373e-47,
    3.99096405814766403e-23, 7.60303680773472974e-48, -1.03588393592579178e-24, -5.28015972521441651e-50,
    -4.53611647726836797e-26,
  },
  {  // C_9
    7.01260400250725395e-31, -3.02079704385429278e-06, -5.53071327166693857e-31, 7.06952232429564300e-07,
    -9.74187671618784986e-32, -2.21165203025285896e-07, 3.20277781796763398e-32, 6.51579761280399479e-08,
    -1.68158949914067365e-33, -1.62087339811117486e-08, -4.71276138378703096e-34, 2.94852983420573015e-09,
    1.35475471821073850e-34, -2.35452870373972246e-10, -2.56855540437578714e-35, -4.05103234551368709e-11,
    4.46554637233029422e-36, 1.29066382675244887e-11, -7.18482444405591977e-37, -7.51832792602010065e-13,
    1.04885647289000266e-37, -1.28191680426235868e-13, -1.35023573596916303e-38, 1.18974209065657325e-14,
    1.41997361121471464e-39, 7.62605702966061553e-16, -9.66014623106903716e-41, -6.03352950133940514e-17,
    -1.66012932685434386e-42, -3.10017310238187036e-18, 1.62791744682527877e-42, 1.46568103757607604e-19,
    -2.48295864616397764e-43, 7.96136138647527287e-21, 1.87743762775479147e-44, -1.88834489562114092e-22,
    -1.23775952004299968e-46, -1.29057500413155464e-23, -1.23577766502491087e-46, 1.33987472712636219e-25,
    1.06581449002384704e-47,
  },
  {  // C_10
    6.98115792822448096e-08, -3.92130203441077881e-28, 5.18760209978190928e-08, 1.77183847803489470e-28,
    -1.50256894004167038e-07, -7.06480302600544075e-29, 5.38517541542912922e-08, 1.94423275984313287e-29,
    -1.20094709472126666e-08, -4.12984103346433151e-30, 1.84414161121340648e-09, 6.15895404174706263e-31,
    -6.05128592258187907e-11, -5.43589149031807403e-32, -5.89139276447941427e-11, 1.16560952341734901e-33,
    1.65157726414351158e-11, 3.33996802497459448e-34, -1.64899182754527419e-12, -8.87206397106330665e-36,
    -8.45000740924139622e-14, -1.87942753727809275e-35, 3.02351801777265525e-14, 6.53787878867896868e-36,
    -6.17920112377458022e-16, -1.36753651449588333e-36, -2.15064802078085275e-16, 2.03814447128536785e-37,
    5.23605841694507431e-18, -2.10700739882500733e-38, 8.70294499075888634e-19, 1.14135271803423040e-39,
    -1.27211274945221080e-20, 5.22975136037957042e-41, -2.15088067457692133e-21, -1.68108766234477972e-41,
    9.44269746350293011e-24, 1.34201322772633560e-42, 3.38337092972659014e-24, -9.43288530248677742e-45,
    1.22423586598890731e-26,
  },
  {  // C_11
    6.52351564568379940e-26, -7.20526688624800894e-07, -5.19294745818678382e-26, 9.52465196769329899e-08,
    -9.01308489231256875e-27, -6.86071033361432516e-09, 2.94867488022692671e-27, 1.08618607721571695e-09,
    -1.43241705986486252e-28, -5.64765455464593977e-10, -4.73100560296989112e-29, 3.03031357220728249e-10,
    1.31889456337228293e-29, -1.01610235115023986e-10, -2.45168119806117468e-30, 2.12186953394579872e-11,
    4.19113986274698309e-31, -2.35940657303057624e-12, -6.69123342687426038e-32, -2.49356166994067791e-14,
    9.78620625812207954e-33, 4.48872517065874788e-14, -1.27436086985661653e-33, -4.09384456502759617e-15,
    1.37586381260750503e-34, -2.16256112589289783e-16, -1.01065703044028883e-35, 4.04855810908678967e-17,
    1.27101531178317452e-38, 5.79719229786336427e-19, 1.33963667589986785e-37, -1.81954393746495852e-19,
    -2.21297789149188643e-38, -1.91376955630873724e-21, 1.78891092014250493e-39, 4.65424134815649485e-22,
    -2.58022089129126938e-41, 6.23938988251053279e-24, -1.03350063364385366e-41, -7.52147323099885265e-25,
    9.88363723733641026e-43,
  },
  {  // C_12
    -2.97409735237057701e-08, -1.98170246663571357e-23, 6.06800092694518786e-08, 8.92194674321284864e-24,
    -4.23949883259870549e-08, -3.58694006206421208e-24, 1.39331359989780813e-08, 9.88514282768605508e-25,
    -3.19566637067887969e-09, -2.09632520858752570e-25, 7.14448989492699227e-10, 3.12075423985770044e-26,
    -1.49903924202250116e-10, -2.74784415213261244e-27, 2.52196243970081209e-11, 5.74473456623067601e-29,
    -2.62133014142083790e-12, 1.72245539468717501e-29, -3.00491732605498133e-14, -4.96353714125502114e-31,
    6.17316841537723712e-14, -9.46208120732003277e-31, -8.70482384661508878e-15, 3.30635915803209832e-31,
    1.20673394311558452e-16, -6.92491489858497357e-32, 8.33969027145352467e-17, 1.03279535128589309e-32,
    -4.93791805314166515e-18, -1.06841611949336068e-33, -3.91230485180356068e-19, 5.79721674690193124e-35,
    2.83750080763014728e-20, 2.63577200184840261e-36, 1.27655075103120462e-21, -8.51115465311709538e-37,
    -7.93762377238581255e-23, 6.80289854466727045e-38, -3.04117789906067796e-24, -4.85098127522762684e-40,
    1.29378088501751600e-25,
  },
  {  // C_13
    1.74709834252863993e-21, -2.01596113122822438e-07, -1.40858600272394390e-21, 8.16294756095163046e-09,
    -2.39571819810971528e-22, 9.21478534853614214e-09, 7.78195775005645807e-23, -3.00223703911738072e-09,
    -3.34264353297487358e-24, 7.32059352682274845e-10, -1.39656885590482548e-24, -1.45790105681089373e-10,
    3.75076630178820525e-25, 2.16143317360139024e-11, -6.79780407108444581e-26, -1.66829572997555381e-12,
    1.13617990191325149e-26, -2.05068778834721072e-13, -1.79465757321270736e-27, 9.41639266308883784e-14,
    2.63151273410123102e-28, -1.45950973555278163e-14, -3.48079815184497475e-29, 7.36444758275105363e-16,
    3.88915201532707100e-30, 1.05040313429832982e-16, -3.12398747687174762e-31, -1.67112375006448879e-17,
    6.57109697554550932e-33, 8.26869712309351142e-20, 2.93593949455022578e-33, 1.05916297815350788e-19,
    -5.56502488813967167e-34, -2.52679469944821335e-21, 4.94824253557003729e-35, -3.83346108271335107e-22,
    -1.22319048311719165e-36, 8.96164135347360104e-24, -2.33498187762536314e-37, 8.98251871811071864e-25,
    2.63492466923467646e-38,
  },
  {  // C_14
    -2.40385752922147610e-08, -2.89903113878207270e-19, 3.04753617758445190e-08, 1.29798459152059536e-19,
    -7.49654253711653109e-09, -5.27882054296438585e-20, 1.42908312911275126e-09, 1.45774211042164808e-20,
    -6.21747195629749055e-11, -3.08470614046174764e-21, -1.63449485777456060e-11, 4.58094496357505233e-22,
    2.50863509297697649e-13, -4.02039768334521670e-23, 1.69351037663257759e-12, 8.11426386857742299e-25,
    -6.81017668499138524e-13, 2.58648191530958248e-25, 1.56552089357562093e-13, -8.17475753286714130e-27,
    -2.24984444666215040e-14, -1.37751095330033765e-26, 1.50194927331620363e-15, 4.84156612802893516e-27,
    1.12079077045366624e-16, -1.01569422673304054e-27, -3.32080221764189694e-17, 1.51613084866464990e-28,
    1.93545951082848291e-18, -1.56968605085970055e-29, 1.50484154870780535e-19, 8.53359736770428080e-31,
    -1.96035309921241294e-20, 3.84489464765555315e-32, -2.55281854160912427e-22, -1.24812469388752569e-32,
    8.39074290885395489e-23, 9.98981374461253784e-34, 1.77045872265835988e-25, -7.23171474199354738e-36,
    -2.13574479054661908e-25,
  },
  {  // C_15
    1.31485695560181066e-17, -5.81546566646761933e-08, -1.07831870291449468e-17, -1.44937368358814467e-09,
    -1.78485009083041586e-18, 4.44821792802322678e-09, 5.73801586921652383e-19, -1.07166392816060316e-09,
    -2.00671329486964415e-20, 1.97727841637380570e-10, -1.18418446137605236e-20, -3.80178551206762269e-11,
    3.04697275988498475e-21, 7.60950241970354600e-12, -5.35331114669674942e-22, -1.47085962248045434e-12,
    8.69052688020333422e-23, 2.47706926354825568e-13, -1.35314970987629105e-23, -3.15005385567538649e-14,
    1.99101504280058893e-24, 2.10820368961040403e-15, -2.68877886325061526e-25, 1.54473759471866141e-16,
    3.13605908767154496e-26, -5.72230712660061334e-17, -2.77865801735679756e-27, 5.53540037894062854e-18,
    1.13345378572377912e-28, 3.07388378169097336e-20, 1.54067290592599728e-29, -4.87587344979769429e-20,
    -3.81639050454873982e-30, 2.33654465365410733e-21, 3.88428322342958683e-31, 1.83970689863993703e-22,
    -1.46572573820391272e-32, -1.38762396205635416e-23, -1.31326424177382107e-33, -4.15844120260284160e-25,
    1.97017167050131275e-34,
  },
  {  // C_16
    -1.31766390782102828e-08, -1.17124298635629539e-15, 1.32496176146176033e-08, 5.19909512757527873e-16,
    3.29871371966557047e-10, -2.14779237238225877e-16, -5.74666982239935544e-10, 5.94879955629372284e-17,
    2.16864911096229578e-10, -1.25543278987176335e-17, -5.76788814792039544e-11, 1.85844817218029766e-18,
    1.19225190208117311e-11, -1.62413418364837176e-19, -2.08524499526056989e-12, 3.13034226713523226e-21,
    3.08973892853554998e-13, 1.07783995304092118e-21, -3.44045309138132183e-14, -3.74225266572731947e-23,
    1.61657108726143915e-15, -5.53480418412680350e-23, 3.52331312394681654e-16, 1.95872255326810018e-23,
    -1.00066360040919676e-16, -4.11684260667587178e-24, 1.15740857219684405e-17, 6.15098780615923465e-25,
    -3.50360512394076991e-19, -6.37348860461211281e-26, -7.92740692482074038e-20, 3.47147734980113277e-27,
    9.36098065557878932e-21, 1.55025992281906172e-28, -1.31395140855435823e-23, -5.05830940295720422e-29,
    -5.13995263190913372e-23, 4.05339830788329515e-30, 1.43534775590737151e-24, -2.96905578478678555e-32,
    1.58540222589318982e-25,
  },
  {  // C_17
    2.50211934053432263e-14, -1.71298075977254784e-08, -2.09797996225368322e-14, -6.81447780886403534e-10,
    -3.35214469622576089e-15, 1.27713321562940552e-09, 1.06164575179849891e-15, -1.80832163683898609e-10,
    -2.51902601721917096e-17, -3.50634293237160325e-12, -2.59202954645206270e-17, 5.38379924701369958e-12,
    6.36674136218829937e-18, -1.22749920743448499e-12, -1.07875657785885500e-18, 1.77080880913119606e-13,
    1.68887431726335669e-19, -1.20230757634653844e-14, -2.58073434378855153e-20, -2.13929906466389047e-15,
    3.81464599453470419e-21, 9.40819045547668405e-16, -5.29072641470665731e-22, -1.83858311952252041e-16,
    6.49660159015351420e-23, 2.14474981669651226e-17, -6.37059338172948777e-24, -1.04342766480171983e-18,
    3.77644613282797369e-25, -1.07560560084070869e-19, 1.23511413094070288e-26, 2.22847983385389472e-20,
    -6.31778162886861745e-27, -1.05409453138247568e-21, 7.79558896106326339e-28, -8.34751996444958476e-23,
    -4.16974494318512792e-29, 9.90635813326056033e-24, -1.37353872826353764e-30, 2.13225660472520277e-26,
    3.71572329371580159e-31,
  },
  {  // C_18
    -6.75663746383910963e-09, -1.13337781816095462e-12, 6.08510167796109165e-09, 4.96090096290419602e-13,
    1.06393869927980170e-09, -2.09202879953200372e-13, -4.57326289698057392e-10, 5.82097428719393003e-14,
    8.77793339627761321e-11, -1.22499420447429844e-14, -1.42351523123391652e-11, 1.80660833764930128e-15,
    2.16190692072974013e-12, -1.57134866745420290e-16, -3.38041407643345650e-13, 2.88140674328217812e-18,
    6.14401264502112780e-14, 1.07445256203681220e-18, -1.21559253458444988e-14, -4.01845742534997887e-20,
    2.22562097012577153e-15, -5.33406509764764414e-20, -3.34168183411639016e-16, 1.89946611456272834e-20,
    3.63047316099585357e-17, -3.99870873303874408e-21, -1.95011216577799954e-18, 5.97876386258063527e-22,
    -1.59112664187907893e-19, -6.19823160710755640e-23, 4.48063351653899437e-20, 3.37942347329182991e-24,
    -3.64571529822196018e-21, 1.50193170376100989e-25, -2.87657543777600170e-23, -4.91347978371934469e-26,
    2.69904042178311309e-23, 3.93853581350368406e-27, -1.26909715335039483e-24, -2.88567125729267227e-29,
    -7.77688596783410414e-26,
  },
  {  // C_19
    8.77648279300042652e-12, -4.51252416055862978e-09, -7.56755151260926465e-12, 7.51212465712815013e-11,
    -1.15674050637398850e-12, 1.53899853066725008e-10, 3.58477495940394074e-13, 2.33916231013947326e-11,
    -2.84605851859411400e-15, -2.08334176469652659e-11, -1.06448071370630803e-14, 5.53184941770114384e-12,
    2.49309250608919287e-15, -1.04154652245137066e-12, -4.05778904226410070e-16, 1.74496208448858083e-13,
    6.08337197439024851e-17, -2.78727575955619452e-14, -9.07686097507987051e-18, 4.14460757802693636e-15,
    1.34958718232133204e-18, -5.33832515807201704e-16, -1.93500763138816464e-19, 5.19887627492819097e-17,
    2.51999853768170535e-20, -2.29001261242116869e-18, -2.72893372230948920e-21, -3.45764279552039619e-19,
    2.06416613781444792e-22, 8.93373544845203989e-20, -3.41621531288728952e-24, -9.04703026822743403e-21,
    -1.78461126674873146e-24, 2.35364494103218244e-22, 2.91877677343644738e-25, 5.00117063491071706e-23,
    -2.09275586398023459e-26, -5.44753980959935875e-24, 3.17650392676453392e-29, 5.91290909346771543e-26,
    1.28841322516862506e-28,
  },
  {  // C_20
    -3.49830866478429181e-09, -1.75399595379612378e-10, 3.05268622644300765e-09, 7.47590253124602336e-11,
    6.32947034572393736e-10, -3.23441835884138101e-11, -2.06634991217374903e-10, 9.07645486193085222e-12,
    1.59245453287958714e-11, -1.90850176052954350e-12, 2.05233734732308824e-12, 2.80701426050228239e-13,
    -8.97844394178940354e-13, -2.43686938228671525e-14, 1.98509883944359659e-13, 4.45960254540446917e-16,
    -3.48812505231616986e-14, 1.66282346413503511e-16, 5.13249977009838409e-15, -6.08373623224630077e-18,
    -6.10967001378188214e-16, -8.31070772623938827e-18, 4.92901419704757810e-17, 2.95331011201361788e-18,
    9.38422543765872197e-20, -6.21249652407260826e-19, -9.02491873637729981e-19, 9.28327092374020403e-20,
    1.79448773181244858e-19, -9.61638388232755183e-21, -1.94307822508102431e-20, 5.23116702696979965e-22,
    9.01256316090486314e-22, 2.35019132041935407e-23, 6.88869354152153378e-23, -7.63788727629827673e-24,
    -1.40046239040968705e-23, 6.10857579467728290e-25, 6.62035667016962161e-25, -4.34448321804687904e-27,
    3.76617289397499234e-26,
  },
};

const double kLogHi[513] = {
  0.00000000000000000e+00, 0.00000000000000000e+00, 6.93147180559945286e-01, 1.09861228866810978e+00,
  1.38629436111989057e+00, 1.60943791243410028e+00, 1.79175946922805496e+00, 1.94591014905531323e+00,
  2.07944154167983575e+00, 2.19722457733621956e+00, 2.30258509299404590e+00, 2.39789527279837067e+00,
  2.48490664978800035e+00, 2.56494935746153674e+00, 2.63905732961525841e+00, 2.70805020110221006e+00,
  2.77258872223978114e+00, 2.83321334405621617e+00, 2.89037175789616452e+00, 2.94443897916644026e+00,
  2.99573227355399085e+00, 3.04452243772342301e+00, 3.09104245335831607e+00, 3.13549421592914968e+00,
  3.17805383034794575e+00, 3.21887582486820056e+00, 3.25809653802148214e+00, 3.29583686600432912e+00,
  3.33220451017520380e+00, 3.36729582998647414e+00, 3.40119738166215546e+00, 3.43398720448514627e+00,
  3.46573590279972654e+00, 3.49650756146648023e+00, 3.52636052461616156e+00, 3.55534806148941351e+00,
  3.58351893845610991e+00, 3.61091791264422435e+00, 3.63758615972638566e+00, 3.66356164612964630e+00,
  3.68887945411393625e+00, 3.71357206670430795e+00, 3.73766961828336841e+00, 3.76120011569356238e+00,
  3.78418963391826102e+00, 3.80666248977031962e+00, 3.82864139648909507e+00, 3.85014760171005843e+00,
  3.87120101090789115e+00, 3.89182029811062646e+00, 3.91202300542814596e+00, 3.93182563272432573e+00,
  3.95124371858142753e+00, 3.97029191355212197e+00, 3.98898404656427452e+00, 4.00733318523247117e+00,
  4.02535169073514965e+00, 4.04305126783455027e+00, 4.06044301054641910e+00, 4.07753744390571971e+00,
  4.09434456222210041e+00, 4.11087386417331135e+00, 4.12713438504509167e+00, 4.14313472639153257e+00,
  4.15888308335967150e+00, 4.17438726989563680e+00, 4.18965474202642518e+00, 4.20469261939096572e+00,
  4.21950770517610696e+00, 4.23410650459725968e+00, 4.24849524204935936e+00, 4.26267987704131546e+00,
  4.27666611901605531e+00, 4.29045944114839095e+00, 4.30406509320417019e+00, 4.31748811353631012e+00,
  4.33073334028633106e+00, 4.34380542185368412e+00, 4.35670882668959170e+00, 4.36944785246702150e+00,
  4.38202663467388120e+00, 4.39444915467243913e+00, 4.40671924726425335e+00, 4.41884060779659826e+00,
  4.43081679884331336e+00, 4.44265125649031667e+00, 4.45434729625350734e+00, 4.46590811865458370e+00,
  4.47733681447820686e+00, 4.48863636973213964e+00, 4.49980967033026502e+00, 4.51085950651684975e+00,
  4.52178857704904047e+00, 4.53259949315325628e+00, 4.54329478227000383e+00, 4.55387689160054077e+00,
  4.56434819146783610e+00, 4.57471097850338282e+00, 4.58496747867057231e+00, 4.59511985013458979e+00,
  4.60517018598809180e+00, 4.61512051684125968e+00, 4.62497281328427068e+00, 4.63472898822963586e+00,
  4.64439089914137249e+00, 4.65396035015752307e+00, 4.66343909411206692e+00, 4.67282883446190578e+00,
  4.68213122712421992e+00, 4.69134788222914345e+00, 4.70048036579241657e+00, 4.70953020131233391e+00,
  4.71849887129509415e+00, 4.72738781871234082e+00, 4.73619844839449566e+00, 4.74493212836325018e+00,
  4.75359019110636449e+00, 4.76217393479775630e+00, 4.77068462446566510e+00, 4.77912349311152962e+00,
  4.78749174278204581e+00, 4.79579054559674134e+00, 4.80402104473325675e+00, 4.81218435537241707e+00,
  4.82028156560503707e+00, 4.82831373730230151e+00, 4.83628190695147797e+00, 4.84418708645859120e+00,
  4.85203026391961689e+00, 4.85981240436167194e+00, 4.86753445045558220e+00, 4.87519732320115118e+00,
  4.88280192258637058e+00, 4.89034912822175372e+00, 4.89783979995091112e+00, 4.90527477843842963e+00,
  4.91265488573605236e+00, 4.91998092582812507e+00, 4.92725368515720508e+00, 4.93447393313069149e+00,
  4.94164242260930386e+00, 4.94875989037816844e+00, 4.95582705760126085e+00, 4.96284463025990696e+00,
  4.96981329957600071e+00, 4.97673374242057420e+00, 4.98360662170833635e+00, 4.99043258677873602e+00,
  4.99721227376411470e+00, 5.00394630594545919e+00, 5.01063529409625552e+00, 5.01727983681492429e+00,
  5.02388052084627645e+00, 5.03043792139243529e+00, 5.03695260241362952e+00, 5.04342511691924678e+00,
  5.04985600724953709e+00, 5.05624580534830770e+00, 5.06259503302696690e+00, 5.06890420222023153e+00,
  5.07517381523382660e+00, 5.08140436498446313e+00, 5.08759633523238364e+00, 5.09375020080676233e+00,
  5.09986642782419874e+00, 5.10594547390058029e+00, 5.11198778835654366e+00, 5.11799381241675544e+00,
  5.12396397940325876e+00, 5.12989871492307348e+00, 5.13579843705026207e+00, 5.14166355650266027e+00,
  5.14749447681345274e+00, 5.15329159449777929e+00, 5.15905529921452910e+00, 5.16478597392351446e+00,
  5.17048399503815137e+00, 5.17614973257382882e+00, 5.18178355029208504e+00, 5.18738580584075493e+00,
  5.19295685089021042e+00, 5.19849703126582607e+00, 5.20400668707679515e+00, 5.20948615284142136e+00,
  5.21493575760898587e+00, 5.22035582507832441e+00, 5.22574667371320167e+00, 5.23110861685458683e+00,
  5.23644196282994923e+00, 5.24174701505964258e+00, 5.24702407216048616e+00, 5.25227342804662989e+00,
  5.25749537202778150e+00, 5.26269018890488560e+00, 5.26785815906332822e+00, 5.27299955856374680e+00,
  5.27811465923051681e+00, 5.28320372873798849e+00, 5.28826703069453519e+00, 5.29330482472449226e+00,
  5.29831736654803631e+00, 5.30330490805907573e+00, 5.30826769740120508e+00, 5.31320597904178715e+00,
  5.31811999384421608e+00, 5.32300997913840845e+00, 5.32787616878958126e+00, 5.33271879326536880e+00,
  5.33753807970131788e+00, 5.34233425196481093e+00, 5.34710753071746847e+00, 5.35185813347606665e+00,
  5.35658627467201232e+00, 5.36129216570942546e+00, 5.36597601502185118e+00, 5.37063802812766244e+00,
  5.37527840768416532e+00, 5.37989735354045973e+00, 5.38449506278908885e+00, 5.38907172981650096e+00,
  5.39362754635236197e+00, 5.39816270151775246e+00, 5.40267738187227931e+00, 5.40717177146011885e+00,
  5.41164605185503955e+00, 5.41610040220442013e+00, 5.42053499927228621e+00, 5.42495001748140293e+00,
  5.42934562895444106e+00, 5.43372200355423995e+00, 5.43807930892319558e+00, 5.44241771052179324e+00,
  5.44673737166630989e+00, 5.45103845356570016e+00, 5.45532111535770170e+00, 5.45958551414415894e+00,
  5.46383180502561050e+00, 5.46806014113513150e+00, 5.47227067367147502e+00, 5.47646355193151102e+00,
  5.48063892334199121e+00, 5.48479693349065478e+00, 5.48893772615668674e+00, 5.49306144334054824e+00,
  5.49716822529320215e+00, 5.50125821054472741e+00, 5.50533153593236246e+00, 5.50938833662797744e+00,
  5.51342874616498246e+00, 5.51745289646470738e+00, 5.52146091786224602e+00, 5.52545293913178348e+00,
  5.52942908751142337e+00, 5.53338948872752034e+00, 5.53733426701853659e+00, 5.54126354515842579e+00,
  5.54517744447956229e+00, 5.54907608489522008e+00, 5.55295958492161734e+00, 5.55682806169953736e+00,
  5.56068163101552759e+00, 5.56452040732269371e+00, 5.56834450376109658e+00, 5.57215403217776473e+00,
  5.57594910314631598e+00, 5.57972982598622202e+00, 5.58349630878169911e+00, 5.58724865840024965e+00,
  5.59098698051085652e+00, 5.59471137960183906e+00, 5.59842195899837503e+00, 5.60211882087970103e+00,
  5.60580206629599775e+00, 5.60947179518495975e+00, 5.61312810638807047e+00, 5.61677109766657168e+00,
  5.62040086571714959e+00, 5.62401750618733853e+00, 5.62762111369063689e+00, 5.63121178182136539e+00,
  5.63478960316924926e+00, 5.63835466933374541e+00, 5.64190707093811383e+00, 5.64544689764323770e+00,
  5.64897423816120625e+00, 5.65248918026865077e+00, 5.65599181081985236e+00, 5.65948221575962140e+00,
  5.66296048013594611e+00, 5.66642668811243233e+00, 5.66988092298051960e+00, 5.67332326717149282e+00,
  5.67675380226828175e+00, 5.68017260901706766e+00, 5.68357976733868142e+00, 5.68697535633982021e+00,
  5.69035945432406010e+00, 5.69373213880269979e+00, 5.69709348650540459e+00, 5.70044357339068686e+00,
  5.70378247465620092e+00, 5.70711026474887539e+00, 5.71042701737486968e+00, 5.71373280550936880e+00,
  5.71702770140622185e+00, 5.72031177660741186e+00, 5.72358510195238068e+00, 5.72684774758719684e+00,
  5.73009978297357403e+00, 5.73334127689774586e+00, 5.73657229747919217e+00, 5.73979291217923393e+00,
  5.74300318780948249e+00, 5.74620319054015294e+00, 5.74939298590825310e+00, 5.75257263882563308e+00,
  5.75574221358691229e+00, 5.75890177387728031e+00, 5.76205138278017692e+00, 5.76519110278484437e+00,
  5.76832099579377200e+00, 5.77144112313001578e+00, 5.77455154554440853e+00, 5.77765232322265643e+00,
  5.78074351579232903e+00, 5.78382518232973730e+00, 5.78689738136670773e+00, 5.78996017089725346e+00,
  5.79301360838414414e+00, 5.79605775076537189e+00, 5.79909265446052569e+00, 5.80211837537706288e+00,
  5.80513496891648817e+00, 5.80814248998044391e+00, 5.81114099297670084e+00, 5.81413053182506623e+00,
  5.81711115996320416e+00, 5.82008293035236157e+00, 5.82304589548301887e+00, 5.82600010738044993e+00,
  5.82894561761020746e+00, 5.83188247728351694e+00, 5.83481073706260478e+00, 5.83773044716593947e+00,
  5.84064165737339813e+00, 5.84354441703136018e+00, 5.84643877505772469e+00, 5.84932477994685929e+00,
  5.85220247977447450e+00, 5.85507192220242700e+00, 5.85793315448345897e+00, 5.86078622346586542e+00,
  5.86363117559809677e+00, 5.86646805693329654e+00, 5.86929691313377422e+00, 5.87211778947541596e+00,
  5.87493073085203044e+00, 5.87773578177963874e+00, 5.88053298640070032e+00, 5.88332238848827860e+00,
  5.88610403145015582e+00, 5.88887795833288052e+00, 5.89164421182577147e+00, 5.89440283426485045e+00,
  5.89715386763674054e+00, 5.89989735358249145e+00, 5.90263333340136587e+00, 5.90536184805457065e+00,
  5.90808293816893126e+00, 5.91079664404052707e+00, 5.91350300563826980e+00, 5.91620206260743497e+00,
  5.91889385427314618e+00, 5.92157841964381593e+00, 5.92425579741453223e+00, 5.92692602597041063e+00,
  5.92958914338989462e+00, 5.93224518744801088e+00, 5.93489419561958798e+00, 5.93753620508242630e+00,
  5.94017125272043156e+00, 5.94279937512670120e+00, 5.94542060860657529e+00, 5.94803498918064566e+00,
  5.95064255258772690e+00, 5.95324333428778463e+00, 5.95583736946483100e+00, 5.95842469302978195e+00,
  5.96100533962327361e+00, 5.96357934361844588e+00, 5.96614673912369220e+00, 5.96870755998536584e+00,
  5.97126183979046221e+00, 5.97380961186926118e+00, 5.97635090929793389e+00, 5.97888576490112200e+00,
  5.98141421125448058e+00, 5.98393628068719075e+00, 5.98645200528443766e+00, 5.98896141688986372e+00,
  5.99146454710798171e+00, 5.99396142730656933e+00, 5.99645208861902113e+00, 5.99893656194668257e+00,
  6.00141487796115047e+00, 6.00388706710653874e+00, 6.00635315960173255e+00, 6.00881318544259457e+00,
  6.01126717440416147e+00, 6.01371515604280216e+00, 6.01615715969835385e+00, 6.01859321449623419e+00,
  6.02102334934952665e+00, 6.02344759296103316e+00, 6.02586597382531419e+00, 6.02827852023069788e+00,
  6.03068526026126328e+00, 6.03308622179880150e+00, 6.03548143252475633e+00, 6.03787091992213742e+00,
  6.04025471127741387e+00, 6.04263283368238113e+00, 6.04500531403601205e+00, 6.04737217904627755e+00,
  6.04973345523195771e+00, 6.05208916892441717e+00, 6.05443934626937086e+00, 6.05678401322862481e+00,
  6.05912319558179657e+00, 6.06145691892801697e+00, 6.06378520868760784e+00, 6.06610809010374741e+00,
  6.06842558824411071e+00, 6.07073772800248967e+00, 6.07304453410040512e+00, 6.07534603108868421e+00,
  6.07764224334903425e+00, 6.07993319509558994e+00, 6.08221891037644635e+00, 6.08449941307517150e+00,
  6.08677472691230648e+00, 6.08904487544684603e+00, 6.09130988207769786e+00, 6.09356977004513567e+00,
  6.09582456243222470e+00, 6.09807428216624015e+00, 6.10031895202006424e+00, 6.10255859461356920e+00,
  6.10479323241498495e+00, 6.10702288774225455e+00, 6.10924758276436553e+00, 6.11146733950267862e+00,
  6.11368217983223161e+00, 6.11589212548303429e+00, 6.11809719804134833e+00, 6.12029741895095025e+00,
  6.12249280951438646e+00, 6.12468339089420510e+00, 6.12686918411418535e+00, 6.12905021006054529e+00,
  6.13122648948314097e+00, 6.13339804299664859e+00, 6.13556489108173864e+00, 6.13772705408623409e+00,
  6.13988455222625529e+00, 6.14203740558735589e+00, 6.14418563412564556e+00, 6.14632925766889748e+00,
  6.14846829591764710e+00, 6.15060276844627918e+00, 6.15273269470410433e+00, 6.15485809401641770e+00,
  6.15697898558555501e+00, 6.15909538849193261e+00, 6.16120732169507690e+00, 6.16331480403464127e+00,
  6.16541785423142041e+00, 6.16751649088834153e+00, 6.16961073249145642e+00, 6.17170059741091492e+00,
  6.17378610390193661e+00, 6.17586727010576109e+00, 6.17794411405060018e+00, 6.18001665365257224e+00,
  6.18208490671663213e+00, 6.18414889093748332e+00, 6.18620862390049364e+00, 6.18826412308258966e+00,
  6.19031540585314755e+00, 6.19236248947487233e+00, 6.19440539110467192e+00, 6.19644412779452036e+00,
  6.19847871649230786e+00, 6.20050917404268986e+00, 6.20253551718792284e+00, 6.20455776256869029e+00,
  6.20657592672492786e+00, 6.20859002609662891e+00, 6.21060007702465278e+00, 6.21260609575151879e+00,
  6.21460809842219142e+00, 6.21660610108486456e+00, 6.21860011969172888e+00, 6.22059017009973925e+00,
  6.22257626807136877e+00, 6.22455842927536018e+00, 6.22653666928746574e+00, 6.22851100359118348e+00,
  6.23048144757848199e+00, 6.23244801655052250e+00, 6.23441072571837118e+00, 6.23636959020370440e+00,
  6.23832462503950769e+00,
};
const double kLogLo[513] = {
  0.00000000000000000e+00, 0.00000000000000000e+00, 2.31904681384629956e-17, -9.07129723500152996e-17,
  4.63809362769259912e-17, 9.28008169108590161e-17, 4.34997982509633470e-17, 7.32358620790490676e-17,
  1.80593706877904650e-16, -1.81425944700030599e-16, -2.17075622338224935e-16, -1.25358421142316092e-16,
  -4.43320360730893084e-17, -2.55809750972088560e-18, 2.07448632680027720e-16, 2.08784456084372036e-18,
  9.27618725538519823e-17, -8.50069663538632547e-17, 1.74831430825979362e-16, 1.97761721195356264e-16,
  1.39181753187785001e-16, -1.74771102709662288e-17, -2.13190255466368747e-16, 1.57583598672831864e-17,
  -1.32163870397141970e-16, 1.85601633821718032e-16, -9.03899318337735379e-17, -5.00943121250145906e-17,
  1.19616798355975065e-16, -1.15531042406855653e-16, -8.57439897632089389e-17, -2.58637636942976716e-17,
  4.93003822979932696e-18, 5.97321143269992316e-18, -1.72838800677915910e-16, 1.66036678989908096e-16,
  8.69995965019266940e-17, 9.64391838597085444e-17, 1.09929886871303609e-16, 1.28773535065295126e-16,
  5.13499188637323580e-17, -1.46280049427047759e-16, -1.05308944595018887e-16, 3.87950808569972512e-17,
  1.43067120059641214e-16, 1.33419477135859737e-16, -7.20734744567694721e-17, 1.55341994915926076e-16,
  -2.19995704721194625e-16, 1.46471724158098135e-16, 9.77697994976653891e-17, 4.63246662211527476e-17,
  -1.78221766157826206e-16, -1.30980783106314244e-16, -1.37926146449067258e-16, -2.54602209156488371e-16,
  -4.12304245818140207e-16, -1.14995856079690331e-16, 2.40726333119154332e-16, -2.54512326143957958e-16,
  2.70513385762800997e-16, -1.05157568140704235e-16, -1.13695598018350327e-16, 1.13854522304049777e-16,
  3.61187413755809300e-16, 3.12287324326169442e-16, 3.62230586958709890e-16, 3.35334798006654635e-16,
  -2.60670635001968590e-16, -2.96999217407763412e-16, -3.65884365184207200e-16, -3.57907085135433688e-17,
  -8.32237822125958311e-19, 1.78021385326136475e-16, -4.35481860314406715e-16, 3.16933266396734053e-16,
  2.20980525472509536e-17, -2.74167163988298307e-16, 4.09417007412424645e-17, -3.88447456209648629e-18,
  4.07607294389742306e-16, -3.62851889400061198e-16, -2.34111883751100439e-16, -3.39759482860753110e-16,
  2.50948430930991061e-16, -2.14250754368035559e-16, 3.95052456383007206e-16, 1.58005901681603583e-17,
  -3.88853924114474082e-16, 1.96775980678232752e-16, 4.55876428118070697e-17, 2.92722369494359506e-16,
  -1.59905308780822127e-16, -3.38621340969344267e-16, 6.75101605918734204e-17, 6.85179331811839847e-17,
  1.36261670804815335e-16, 3.24510733130262232e-18, -3.85449320016017136e-16, 1.37304844007715926e-16,
  -4.34151244676449870e-16, -2.28213021947403639e-16, 4.02582041747162727e-16, -8.90837488167955527e-17,
  1.78035609368183755e-16, 2.97368311564924117e-16, 2.25276592419695741e-16, 3.95162899349130703e-16,
  -2.25757980773119889e-16, 2.49250187369175527e-16, -3.42434043480541027e-16, 2.27770816434724553e-16,
  3.88042339557932370e-16, -2.48191444586251756e-16, -2.02827690403742986e-16, -1.13485428146889096e-16,
  1.52894498795101652e-16, -1.83984042209751494e-16, -3.42344160468010663e-16, -2.33815709199845471e-16,
  1.82681551438748367e-16, -2.50716842284632183e-16, -1.92989402464756890e-16, 4.29140792998030878e-16,
  -2.01527432342402982e-16, -3.87731364042516864e-16, 2.60226879799971212e-17, 7.70553558309649380e-17,
  2.73355579431756645e-16, 1.70126713432013266e-16, 2.24455490002116786e-16, 3.65853692641297900e-16,
  2.74398752634657235e-16, 4.89529783493740301e-17, 2.47502963682601980e-16, -1.79338100139186883e-16,
  -3.48502469326021246e-16, -1.58136056734552695e-16, -3.84831051731816067e-16, 2.65178229397756147e-16,
  4.34462220191865377e-16, -1.57415582359120520e-16, -1.23622542837596018e-16, 3.16172691198025630e-16,
  -8.86640721461786168e-17, 1.99314379429034683e-16, 9.01895510020838197e-17, 2.77803356733114131e-16,
  3.64864725061665862e-16, -5.32274648313881165e-17, 2.29101432072681398e-16, 4.12160388844026937e-17,
  -6.57337817768017018e-17, 1.77656298796168762e-16, -3.61998998312350963e-16, -1.55107551708469951e-16,
  -4.68901335828101909e-17, 3.59356134380515658e-16, -9.17163088861491471e-17, 3.50849468701775162e-19,
  3.19775460065689651e-16, -1.33050382978699057e-16, 4.37494695976011379e-16, 4.70081329763413369e-18,
  -3.21943718075153095e-16, 3.20818633268590241e-16, -4.27591317184805766e-16, -3.31927703835948043e-16,
  1.63116596606938406e-16, -5.11619501944177121e-18, -3.02082588692088190e-16, -4.27753433354736926e-16,
  3.07220622058954550e-16, -3.46315595256128028e-16, -7.20312441558923002e-17, -4.07296318874326800e-16,
  4.11492661261598495e-16, 3.20908516281120655e-16, 1.08944146354180096e-16, 6.96566188773200540e-17,
  -4.22441915122455857e-17, -3.26981248257116810e-16, 2.04890535170306826e-16, -4.17915145415750830e-16,
  -2.47737143104874807e-16, 4.11284605695598869e-16, -4.26453175293396922e-16, -2.10365387496179346e-16,
  -2.03216737321792350e-17, -1.98903054970996819e-16, -1.93139011428686769e-17, -1.55494159297212199e-17,
  4.84298364807626740e-17, -5.01731853558181180e-17, -8.45867269927500331e-17, -4.70252948877165053e-19,
  4.14897265360055441e-16, 1.52203343290049832e-17, 4.94730096836632702e-17, 1.31911034161683328e-16,
  3.66195340699622707e-16, 2.25772207316080214e-17, -3.16044856271456294e-16, 1.79749424597224722e-16,
  3.14750207423110072e-16, -2.75523837441220039e-16, -1.76915583140848196e-16, 2.78421625017315200e-16,
  9.02037750441310998e-17, 7.24033000530401852e-17, 2.09536477240871437e-16, -1.52173602594950141e-16,
  1.37444758095643061e-16, -3.48548285788589958e-16, 3.07331065025078048e-16, 3.53640502692887606e-16,
  -3.13589815097172544e-16, -1.74672506540279912e-16, 1.61418353045122897e-16, -1.34736191948910120e-16,
  -4.30265877804593682e-16, 3.56524145986478467e-16, 1.39938982110671898e-16, -8.89492580456249205e-17,
  3.00210505233879715e-16, 4.17568912168744072e-18, -3.36023278910304411e-16, -2.55727915009514251e-16,
  -2.90659524727795666e-16, -3.05884786084824831e-16, -2.01317262470941752e-16, 3.01253678436780305e-16,
  6.50626644710489967e-17, 4.06070969490739633e-16, -2.71815876533804149e-16, 2.60982069017537930e-17,
  -4.30175994792063318e-16, -3.16642051837143087e-16, -3.21647543523898175e-16, -3.53180098108934980e-16,
  9.48497171146957112e-17, 2.15436284460673854e-16, -3.38548676608684838e-16, 2.12568953025017414e-16,
  -2.80821236788809570e-16, -4.26861273706136736e-16, 3.41308958673978222e-16, -2.48885586164427222e-16,
  -2.89359266666455662e-16, 2.35661359564325502e-16, 4.12615221333555713e-16, 4.05443501067098406e-16,
  -6.18091463440555341e-17, -1.09600061275032896e-16, -1.07764784930877235e-17, 3.61170088057043078e-16,
  1.85523745107703965e-16, -2.86195623767604511e-16, 8.22948791079605982e-17, 3.91719650863788932e-16,
  1.36623655678064131e-16, -2.96956987106886252e-16, 2.78021858317245245e-16, -1.75355256310285016e-16,
  1.86566918310604555e-16, 1.83864638729576092e-16, -3.88788559746786253e-17, -1.15981596596813868e-16,
  1.59671129358549324e-16, 4.32061403332925943e-17, -2.67169934463239538e-16, -1.33180472430218883e-16,
  -4.36334303650073901e-16, -2.00352077806871144e-17, -2.45967891058605351e-16, -3.83845997170660676e-16,
  4.15515533644256510e-16, -3.32829447296842151e-17, 1.77346395073703492e-16, 2.36799501455734345e-16,
  3.46630385867812721e-16, 3.59227439227294512e-16, -2.45247416683173200e-16, -8.01098603701401776e-17,
  -2.11454377161648698e-16, -2.44239644093862611e-16, 2.28340856873972974e-16, -2.95088792273029975e-16,
  -1.76495906470231284e-16, -1.70013932707726509e-16, 1.11482545104982028e-16, -3.09512469943743985e-16,
  2.35771667803116198e-18, -3.58243446716283503e-16, 1.89971522409061501e-16, -3.83756114158130262e-16,
  2.77032890737613207e-16, -1.75452733267330670e-16, -1.41059299155440778e-16, -4.30888947492500328e-16,
  1.41269597748628742e-16, 3.34075547861077621e-16, -4.66157954396499678e-17, 3.47207820477674974e-16,
  -1.53565616100854357e-16, -2.34401356154876514e-16, 8.98244644721160946e-17, 3.18414531169077025e-16,
  4.38347587063721614e-16, -4.01841326091842160e-16, -2.42939386032522607e-16, 2.03992714076930279e-16,
  -1.34721967906862840e-16, 2.78097478874474543e-16, 2.71524300056463003e-16, -1.53892657101225062e-17,
  -1.79548143210201802e-16, 3.08530715812955898e-16, -8.74809848553508788e-17, 2.03199746300890871e-16,
  2.31943625741636996e-16, 8.24053220740840956e-17, -2.20882217302751712e-16, 1.12754754841493010e-16,
  3.49662861651958723e-16, 1.83043536311997162e-16, -8.31310210264185232e-17, -6.35073899058710555e-17,
  -4.09775552399205750e-16, 6.53325206994384455e-18, 2.32986798944537586e-16, 2.52981721576937800e-17,
  3.72755268191266811e-16, -8.49867608403220547e-17, -4.19759538160000699e-16, 2.06091009992482331e-16,
  7.52847622828857628e-17, 1.52414308370803298e-16, -9.29480293434944327e-17, 3.27229397838826856e-16,
  -3.89914423016140845e-16, -1.51222184836613763e-16, 3.72593152021335601e-16, 4.41752191162178511e-16,
  2.19388787734901895e-16, -4.26243005421935716e-16, -4.34147429580180684e-16, -9.49958485561470329e-17,
  -1.59863078479944968e-16, 1.59332139385698361e-16, 3.93050266501745777e-16, 3.91436800215327118e-16,
  3.23660826937545839e-16, 2.29759595704658813e-16, 2.33076681957067999e-16, -1.65034496527715667e-16,
  2.11123120301274346e-17, 3.41605133225233142e-16, -1.81752154467326106e-17, 2.74930461694915409e-16,
  -1.30076025836298253e-16, 3.95523442390712529e-16, -4.14813082581169465e-16, 3.24704000140446479e-16,
  1.17058700846254170e-16, 4.87775973119641892e-17, 3.82431439960321747e-16, -3.78770928303295897e-16,
  -3.35568977428927463e-16, 1.16383215722984258e-16, 3.23452771371546213e-16, 1.64299683897766156e-16,
  3.73893410082675655e-16, -3.85695748110290813e-16, -2.98197221820232002e-16, 1.87689478382561773e-16,
  -1.08153508056231890e-16, -1.18089139916576524e-16, -2.86734889295049474e-16, 4.84330126170271751e-17,
  -1.07145735466921338e-16, -2.35702221444081682e-16, -1.03381250253773878e-16, 3.30292068975794682e-16,
  -3.94019978432899814e-17, -4.03410952002470612e-16, -1.38005019679870786e-16, -1.42630863843033354e-16,
  -1.72418561316802701e-16, 4.10179854244267129e-16, -8.83020872729298214e-17, -6.92486064865800714e-17,
  3.27065431036002785e-16, 5.30961153662512743e-17, -7.26114999950476783e-17, -1.33128262576268771e-16,
  -3.83588246403893852e-17, -3.32114335652662340e-16, 4.40791998376306600e-17, -2.63804598925672596e-16,
  2.78363506375570002e-16, -1.48099713232471459e-16, -6.52546135924446402e-17, 4.15667348646044050e-16,
  -4.03876690595508949e-16, 3.96082742285891730e-16, 9.19175902731720793e-17, 4.15169972567455057e-16,
  2.26918373099057367e-16, -4.11119227251462621e-16, -3.63355671765272694e-16, 4.17284785690525917e-16,
  -2.64747417464900851e-16, -4.03321068989940198e-16, 1.90589790693262545e-16, 4.19175148825199818e-16,
  2.37194072007844136e-18, -4.75793478772904479e-17, -1.54285342710124733e-17, 3.06170648806162247e-16,
  1.21704642916818781e-16, 2.84899273335372576e-16, -2.40005436919002772e-16, 4.18005260065958117e-16,
  4.96129237715904120e-17, -3.43494542382207839e-16, -4.36380120112642613e-16, -2.53966310986686450e-16,
  2.19499230701025393e-16, 3.41511392297903794e-18, 2.65808668368834902e-16, 3.79952412985374874e-16,
  -4.01421649421225249e-16, 1.71870244982425437e-16, -2.62504340864332543e-16, -1.13443197846011937e-16,
  7.35865187210702291e-17, 2.13520081062639448e-16, -2.22568026272962800e-16, -1.53357945168568843e-16,
  3.70080707571478895e-16, -3.49542205419324577e-17, 2.68692311662425811e-16, -3.14479127508438870e-17,
  5.21071477866192360e-17, 6.75321926640604595e-17, -1.76781092369677576e-16, -3.65985042106434743e-16,
  2.12378670909827060e-16, -2.53341200551152829e-16, -8.36561452023652224e-17, -2.71638470569363851e-16,
  -4.23855113234357067e-16, -2.71541538390643920e-16, -3.43559749333566906e-16, 1.63478581480187201e-16,
  -3.78491359051848322e-16, -4.04711692391455761e-16, -3.93716620408877536e-16, -1.35101278478877858e-16,
  -2.89149096794994407e-16, -7.30678641776299593e-17, 2.13421844112727650e-16, -1.67662720344532424e-17,
  -2.27691698530036649e-17, 4.20313290716608661e-16, 3.18239135166686978e-16, -1.71783699334291180e-16,
  -3.59647710857856805e-16, 1.86526055160672395e-16, -6.17336274222988593e-17, 4.65985571054690379e-17,
  3.70170590584009259e-16, 3.57525869564743794e-16, -4.04473886161195742e-16, -6.07258548329883074e-17,
  -4.09479377847950831e-16, -3.12406727806344843e-16, -4.41011932432987685e-16, 3.11559321016545788e-16,
  7.01788279064304655e-18, 9.38810863499876619e-17, 1.27604450136621198e-16, 4.42370459446379580e-16,
  -4.26380510932737494e-16, -1.25998680682869670e-16, 1.24737118700964759e-16, 1.27957831367202404e-16,
  -3.68653071112862225e-16, -3.08056763977412488e-16, 3.73485311669935841e-16, 2.16405223158183357e-16,
  2.53477124349925567e-16, 2.43551201089343708e-16, -3.36717420488479877e-16, 8.06105599354364429e-18,
  -3.77191100990508318e-16, -1.84599451359525603e-16, 1.47829525240272847e-16, -1.21300074660912533e-16,
  3.24783387009503058e-16, 2.43493138589130569e-16, 3.17611666743045751e-16, -4.03041863121345131e-17,
  -1.49640980668108190e-16, -3.57456809961575943e-16, -1.97431895599085564e-16, -3.17873772294488360e-16,
  -9.86083128171403851e-17, 2.46830558716410113e-16, 2.73338253732990423e-16, 2.92126424801542408e-17,
  9.76919107836513093e-17,
};

const double kLog2PiHi = 1.83787706640934556e+00;
const double kLog2PiLo = -7.75658831613448290e-17;
const double kTwoPiHi = 6.28318530717958623e+00;
const double kTwoPiLo = 2.44929359829470641e-16;

}  // namespace zetalab::detail
