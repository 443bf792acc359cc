#include "demo.h"

#include "ssnforge/ontology/json_codec.h"

namespace ssnforge::testing {

using ontology::Decimal;
using rdf::Iri;

ontology::SensorType weather_station() {
  ontology::SensorType t;
  t.id = "weatherstation";
  t.name = "WeatherStation";
  t.observes = {{Iri(kAirTemperature), "Air temperature"}, {Iri(kHumidity), "Humidity"}};
  t.capabilities = {
      {Iri(kAirTemperature),
       ontology::Measurement{*Decimal::parse("0.5"), Iri(kCelsius)},
       ontology::Measurement{*Decimal::parse("0.1"), Iri(kHertz)}},
      {Iri(kHumidity),
       ontology::Measurement{*Decimal::parse("2"), Iri(kPercent)},
       ontology::Measurement{*Decimal::parse("0.1"), Iri(kHertz)}},
  };
  return t;
}

ontology::SensorInstance demo_weatherstation() {
  return ontology::SensorInstance{
      "demo-weatherstation",
      "demo-weatherstation",
      "weatherstation",
      std::string("OpenIoT demo deployment"),
      std::string("Weather station monitoring the crop field"),
      *Decimal::parse("46.5191"),
      *Decimal::parse("6.5668"),
      "crop-growth",
      {{Iri(kAirTemperature), Iri(kCelsius), "temp"},
       {Iri(kHumidity), Iri(kPercent), "hum"}},
  };
}

std::string weather_station_json() { return ontology::to_json(weather_station()).dump(2); }

std::string demo_weatherstation_json() {
  return ontology::to_json(demo_weatherstation()).dump(2);
}

}  // namespace ssnforge::testing
